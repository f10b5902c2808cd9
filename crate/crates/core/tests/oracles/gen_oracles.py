"""Independent high-precision reference values for the numeric tests.

Every value here is computed from a route that shares no code with the
library: Fourier inversion of the characteristic function, the Hankel
transform of the isotropic chf, or direct substitution at 50 digits.
Run with `python3 gen_oracles.py` and paste the output into the tests.
"""
from mpmath import mp, mpf, quad, quadosc, exp, sin, cos, pi, besselj, inf

mp.dps = 50


def kernel_literal(u, alpha):
    r = mpf(alpha) / 2
    return sin(r * u) ** r * sin((1 - r) * u) ** (1 - r) / sin(u)


def _fourier_u(x, alpha, kernel):
    # t = u^{1/alpha} turns the chf into e^{-u}; used when the oscillation
    # is too fast for the half-period partition below.
    x, alpha = mpf(x), mpf(alpha)

    def f(u):
        if u == 0:
            return mpf(0)
        t = u ** (1 / alpha)
        jac = t / (alpha * u)
        if kernel == "cos":
            return cos(t * x) * exp(-u) * jac
        return sin(t * x) / t * exp(-u) * jac

    return quad(f, [mpf(k) / 10 for k in range(0, 901)])


def _fourier(x, alpha, kernel):
    # Truncated at t^alpha = 90; the partition combines half periods of the
    # oscillation with a geometric refinement towards t = 0.
    x, alpha = mpf(x), mpf(alpha)
    top = mpf(90) ** (1 / alpha)
    pts = {mpf(0)} | {top * mpf(2) ** -k for k in range(60)}
    if x > 0:
        half = pi / x
        if top / half > 6000:
            return _fourier_u(x, alpha, kernel)
        pts |= {k * half for k in range(1, int(top / half) + 1)}
    pts = sorted(p for p in pts if p <= top)
    if kernel == "cos":
        f = lambda t: cos(t * x) * exp(-t ** alpha)
    else:
        f = lambda t: (sin(t * x) / t if t > 0 else x) * exp(-t ** alpha)
    return quad(f, pts)


def sas_pdf(x, alpha):
    return _fourier(x, alpha, "cos") / pi


def sas_cdf(x, alpha):
    # F(x) = 1/2 + (1/pi) int_0^inf sin(tx)/t e^{-t^a} dt
    return mpf(1) / 2 + _fourier(x, alpha, "sin") / pi


def amp_pdf_hankel(r, alpha, sigma):
    r, sigma = mpf(r), mpf(sigma)
    f = lambda t: t * besselj(0, r * t) * exp(-(sigma * t) ** mpf(alpha))
    return r * quadosc(f, [0, inf], zeros=lambda n: mp.besseljzero(0, n) / r)


def amp_cdf_hankel(r, alpha, sigma):
    r, sigma = mpf(r), mpf(sigma)
    f = lambda t: besselj(1, r * t) * exp(-(sigma * t) ** mpf(alpha))
    return r * quadosc(f, [0, inf], zeros=lambda n: mp.besseljzero(1, n) / r)


AMPLITUDE_GRID = [
    (r, a, s)
    for a in ["0.8", "1.1", "1.4", "1.7", "1.95"]
    for (r, s) in [("0.3", "0.5"), ("1", "1"), ("2.5", "1"), ("6", "2")]
]


def amplitude_grid():
    print("# amplitude 20-point grid via Hankel (r, alpha, sigma, pdf, cdf)")
    for (r, a, s) in AMPLITUDE_GRID:
        print(f"({r}, {a}, {s}, {mp.nstr(amp_pdf_hankel(r, a, s), 20)}, {mp.nstr(amp_cdf_hankel(r, a, s), 20)}),")


if __name__ == "__main__":
    print("kernel_literal(1.0, 1.5) =", mp.nstr(kernel_literal(mpf(1), mpf("1.5")), 20))
    print("# sas_pdf (alpha, x, value)")
    for a in ["0.5", "0.8", "1.1", "1.25", "1.5", "1.75", "1.95", "1.999"]:
        for x in ["0", "0.01", "0.5", "1", "3", "10", "100"]:
            print(f"({a}, {x}, {mp.nstr(sas_pdf(x, mpf(a)), 20)}),")
    print("# sas_cdf (alpha, x, value)")
    for a in ["0.5", "0.8", "1.25", "1.5", "1.95"]:
        for x in ["0.01", "0.5", "1", "3", "10"]:
            print(f"({a}, {x}, {mp.nstr(sas_cdf(x, mpf(a)), 20)}),")
    print("# amplitude pdf/cdf via Hankel (r, alpha, sigma, pdf, cdf)")
    for (r, a, s) in [("2", "1.5", "1"), ("0.5", "1.2", "0.5"), ("1.5", "1.3", "0.8"), ("3", "0.9", "1")]:
        print(f"({r}, {a}, {s}, {mp.nstr(amp_pdf_hankel(r, a, s), 20)}, {mp.nstr(amp_cdf_hankel(r, a, s), 20)}),")
    amplitude_grid()
