#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace gauss_spectra {

using Int = boost::multiprecision::cpp_int;

// C(n, k), zero outside 0 <= k <= n.
inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace gauss_spectra
