#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "matchex/snf.hpp"

namespace matchex {

using Rational = boost::multiprecision::cpp_rational;

// Ceiling of an exact rational, no floating point involved.
BigInt rational_ceil(const Rational& q);

// The correction term epsilon_d(r) = 3r/(d+4) - {1, 2, 3, 4} depending on
// where r falls in the window d+1 <= r <= 2d+4.
Rational jonsson_epsilon(int d, int r);

struct ConnectivityBound {
    int n = 0;
    int d = 0;
    int k = 0; // n = (d+4)k + r
    int r = 0;
    Rational epsilon;
    Rational nu;          // (d^2+3d-1)n / (2(d+4)) - epsilon/2 - 1
    BigInt shifted_bound; // ceil(nu); the complex is (ceil(nu)-1)-connected
};

// Connectivity lower bound for the d-matching complex of K_n, exact
// rational arithmetic throughout.  Requires d >= 2 and n >= d+1.
ConnectivityBound jonsson_nu(int n, int d);

} // namespace matchex
