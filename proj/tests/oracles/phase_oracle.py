"""High-precision reference values for the phase-boundary and spectrum tests.

Evaluates the dressed-state energy differences directly with mpmath at 50
digits and bisects the particle/hole gap. Independent of the C++ library;
the printed numbers are frozen into the C++ test sources.
"""
import mpmath as mp

mp.mp.dps = 50
S3 = mp.sqrt(3)
CP = S3 + 1          # particle shift of the boson energy (downwards)
CH = S3 - 1          # hole shift of the boson energy (upwards)


def chi(n, d, g=1):
    return mp.sqrt(d * d + 4 * g * g * n)


def e_lower(n, wc, wz, g):
    if n == 0:
        return mp.mpf(0)
    d = wc - wz
    return (n - mp.mpf(1) / 2) * wc + wz / 2 - chi(n, d, g) / 2


def mu_p(J, delta, n=1, g=1, wc=0):
    wz = wc - delta
    wcp = wc - CP * J
    return (e_lower(n + 1, wcp, wz, g) - e_lower(n, wcp, wz, g) - wc) / g


def mu_h(J, delta, n=1, g=1, wc=0):
    wz = wc - delta
    wch = wc + CH * J
    return (e_lower(n, wch, wz, g) - e_lower(n - 1, wch, wz, g) - wc) / g


def gap(J, delta, n=1):
    return mu_p(J, delta, n) - mu_h(J, delta, n)


def jc(delta, n=1, jmax=2):
    lo, hi = mp.mpf(0), mp.mpf(jmax)
    # first sign change on a fine scan, then bisect to full precision
    steps = 4000
    prev = lo
    for i in range(1, steps + 1):
        x = lo + (hi - lo) * i / steps
        if gap(x, delta, n) <= 0:
            lo, hi = prev, x
            break
        prev = x
    else:
        return None
    for _ in range(200):
        mid = (lo + hi) / 2
        if gap(mid, delta, n) > 0:
            lo = mid
        else:
            hi = mid
    return lo


def printed_eq30(J):
    return CH * J / 2 - mp.sqrt((2 - S3) * J * J / 2 + 1)


def printed_eq29_corrected(J):
    x = (2 + S3) * J * J / 2
    return -CP * J - mp.sqrt(x + 2) + mp.sqrt(x + 1)


if __name__ == "__main__":
    for J in ["0", "0.1", "0.193"]:
        J = mp.mpf(J)
        print("J", J, "mu_p", mp.nstr(mu_p(J, 0), 20), "mu_h", mp.nstr(mu_h(J, 0), 20),
              "gap", mp.nstr(gap(J, 0), 20))
        print("   eq29c", mp.nstr(printed_eq29_corrected(J), 20), "eq30", mp.nstr(printed_eq30(J), 20))
    for d in [-10, -5, -2, 0, 2, 5]:
        print("delta", d, "gap0", mp.nstr(gap(0, d), 15), "Jc", mp.nstr(jc(d), 20))
    for n in [2, 3]:
        print("lobe", n, "gap0", mp.nstr(gap(0, 0, n), 15), "Jc", mp.nstr(jc(0, n), 20))
    print("chi(3,2,0.5)", mp.nstr(chi(3, 2, mp.mpf("0.5")), 20))
    print("hole wc_eff", mp.nstr(10 + CH, 20))
    print("sin half theta n=4 d=3", mp.nstr(mp.sqrt((1 - mp.mpf(3) / 5) / 2), 20))
    print("lambda3 particle", mp.nstr(7 + 3 * S3, 20))
    print("2-sqrt2", mp.nstr(2 - mp.sqrt(2), 20))
