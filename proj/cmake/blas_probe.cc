// Copyright 2026 The gaugepen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Configure-time check that the LAPACK in use returns correct eigenvectors
// for a mid-sized symmetric matrix. Exit status 0 means the residual is small.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

extern "C" void dsyevd_(const char *jobz, const char *uplo, const int *n, double *a, const int *lda, double *w,
                        double *work, const int *lwork, int *iwork, const int *liwork, int *info);

int main() {
  const int n = 600;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> a(n * n), v;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c <= r; ++c) {
      a[r * n + c] = a[c * n + r] = u(rng);
    }
  }
  v = a;
  std::vector<double> w(n);
  int lwork = -1, liwork = -1, info = 0, iq = 0;
  double wq = 0;
  dsyevd_("V", "U", &n, v.data(), &n, w.data(), &wq, &lwork, &iq, &liwork, &info);
  lwork = static_cast<int>(wq);
  liwork = iq;
  std::vector<double> work(lwork);
  std::vector<int> iwork(liwork);
  dsyevd_("V", "U", &n, v.data(), &n, w.data(), work.data(), &lwork, iwork.data(), &liwork, &info);
  if (info != 0) {
    return 2;
  }
  double worst = 0;
  for (int col = 0; col < n; col += 37) {
    for (int r = 0; r < n; ++r) {
      double s = 0;
      for (int c = 0; c < n; ++c) {
        s += a[r * n + c] * v[col * n + c];
      }
      worst = std::fmax(worst, std::fabs(s - w[col] * v[col * n + r]));
    }
  }
  std::printf("%g\n", worst);
  return worst < 1e-8 ? 0 : 1;
}
