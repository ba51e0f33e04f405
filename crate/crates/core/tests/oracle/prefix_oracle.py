"""High-precision prefix oracle for the frozen regression values in
tests/fixtures.rs. Runs independently of the Rust implementation.

    python3 prefix_oracle.py

Prints n * M_{2,1,0}(1, 1/2, ..., 1/n) at the checkpoint grid, Hardy ratios for
M_{2,1,0} and P_{1/2} on the power-tail and sharpness families, and the
arithmetic-mean divergence ratios on the alpha = 1.1 power tail.
"""
from mpmath import mp, mpf, sqrt

mp.dps = 40


def harmonic_limit(checkpoints):
    out = {}
    s = mpf(0)
    t = mpf(0)
    last = max(checkpoints)
    for n in range(1, last + 1):
        a = mpf(1) / n
        s += sqrt(a)
        t += a
        if n in checkpoints:
            m = (s * s - t) / (n * (n - 1))
            out[n] = n * m
    return out


def hardy_ratio(terms, mean):
    """terms: iterator of mpf; mean in {'cmn210', 'p12', 'p1'}."""
    s = mpf(0)
    t = mpf(0)
    num = mpf(0)
    n = 0
    for a in terms:
        n += 1
        s += sqrt(a)
        t += a
        if mean == 'cmn210':
            m = a if n == 1 else (s * s - t) / (n * (n - 1))
        elif mean == 'p12':
            m = (s / n) ** 2
        else:
            m = t / n
        num += m
    return num / t, num, t


def powertail(alpha, N):
    for n in range(1, N + 1):
        yield mpf(n) ** (-mpf(alpha))


def sharpness(n0, N):
    for n in range(1, N + 1):
        yield mpf(1) / n if n <= n0 else mpf(1) / (mpf(n) ** 2)


if __name__ == '__main__':
    grid = [2, 10**2, 10**3, 10**4, 10**5, 10**6]
    for n, v in harmonic_limit(set(grid)).items():
        print('harmonic_limit', n, mp.nstr(v, 20))
    for mean in ('cmn210', 'p12'):
        r, _, _ = hardy_ratio(powertail(2, 10**5), mean)
        print('powertail2', mean, mp.nstr(r, 20))
        for n0 in (10, 1000):
            r, _, _ = hardy_ratio(sharpness(n0, 10**5), mean)
            print('sharpness', n0, mean, mp.nstr(r, 20))
    for N in (10**3, 10**5):
        r, _, _ = hardy_ratio(powertail('1.1', N), 'p1')
        print('p1_powertail1.1', N, mp.nstr(r, 20))
