#!/usr/bin/env python3
"""Arbitrary-precision reference values for the complex error-function stack.

Prints, to 25 significant digits, reference values for

  * the real complementary error function  erfc(x),
  * the Faddeeva function                  w(z) = exp(-z^2) erfc(-iz),  Im z >= 0,
  * the tilted half-Gaussian integral      Psi(x0, y) = (1/2) exp(-y^2) erfc(x0 + i y),
  * the half-line Gaussian Fourier factor
        T(p; a, sigma) = (2 pi)^(-1/2) Int_0^inf exp(-(x-a)^2/sigma^2) exp(+i p x) dx
                       = (sigma/sqrt(2)) exp(+i p a) Psi(-a/sigma, -p sigma / 2).

These are the quantities the C++ implementation evaluates with a rational
approximation; the values below are frozen into the unit tests.  Run with:

    python3 scripts/reference_erfc.py
"""

import mpmath as mp

mp.mp.dps = 40

FMT = mp.nstr


def fmt(z, digits=25):
    if isinstance(z, mp.mpc) or (hasattr(z, "imag") and z.imag != 0):
        return "%s  %s" % (
            FMT(mp.re(z), digits, strip_zeros=False),
            FMT(mp.im(z), digits, strip_zeros=False),
        )
    return FMT(mp.mpf(z), digits, strip_zeros=False)


def faddeeva(z):
    z = mp.mpc(z)
    return mp.exp(-z * z) * mp.erfc(-1j * z)


def psi(x0, y):
    return mp.mpf("0.5") * mp.exp(-mp.mpf(y) ** 2) * mp.erfc(mp.mpc(x0, y))


def halfline_factor(p, a, sigma):
    p, a, sigma = mp.mpf(p), mp.mpf(a), mp.mpf(sigma)
    return (sigma / mp.sqrt(2)) * mp.exp(1j * p * a) * psi(-a / sigma, -p * sigma / 2)


def halfline_factor_quad(p, a, sigma):
    """Direct numerical check of the closed form above."""
    p, a, sigma = mp.mpf(p), mp.mpf(a), mp.mpf(sigma)
    f = lambda x: mp.exp(-((x - a) ** 2) / sigma**2) * mp.exp(1j * p * x)
    return mp.quad(f, [0, a if a > 0 else 1, mp.inf]) / mp.sqrt(2 * mp.pi)


def main():
    print("# real erfc(x)")
    for x in ["-3.5", "-0.8", "0.25", "2.8284271247461903", "7.0"]:
        print("erfc(%s) = %s" % (x, fmt(mp.erfc(mp.mpf(x)))))

    print()
    print("# Faddeeva w(z), Im z >= 0 (covers both real-axis signs and the strip)")
    for zr, zi in [
        ("0.0", "0.0"),
        ("0.5", "0.1"),
        ("-3.0", "0.002"),
        ("12.0", "0.0"),
        ("-150.0", "9.0"),
        ("0.0", "0.25"),
        ("200.0", "0.0"),
        ("-0.1", "11.5"),
    ]:
        z = mp.mpc(mp.mpf(zr), mp.mpf(zi))
        print("w(%s, %s) = %s" % (zr, zi, fmt(faddeeva(z))))

    print()
    print("# Psi(x0, y) = (1/2) exp(-y^2) erfc(x0 + i y)")
    for x0, y in [
        ("2.0", "3.0"),
        ("-1.5", "4.0"),
        ("0.0", "0.5"),
        ("4.0", "-6.0"),
        ("-3.0", "-2.0"),
        ("0.5", "30.0"),
        ("-8.0", "0.125"),
    ]:
        print("Psi(%s, %s) = %s" % (x0, y, fmt(psi(x0, y))))

    print()
    print("# half-line Gaussian Fourier factor T(p; a, sigma)")
    for p, a, sigma in [
        ("1.3", "0.8", "1.1"),
        ("2.0", "-4.0", "1.0"),
        ("0.7", "4.0", "0.5"),
        ("-2.2", "0.0", "2.0"),
        ("-0.4", "1.7", "0.6"),
    ]:
        closed = halfline_factor(p, a, sigma)
        direct = halfline_factor_quad(p, a, sigma)
        print("T(%s; %s, %s) = %s" % (p, a, sigma, fmt(closed)))
        print("    |closed - quad| = %s" % FMT(abs(closed - direct), 3))


if __name__ == "__main__":
    main()
