"""Independent mpmath oracle for the inflection points of H_alpha.

H''(alpha) is obtained by numerical differentiation of the defining
formula at 50-digit precision, then roots are located with findroot.
"""
import mpmath as mp

mp.mp.dps = 50


def renyi(p, a):
    if a == 1:
        return -mp.fsum(x * mp.log(x) for x in p if x > 0)
    return mp.log(mp.fsum(mp.power(x, a) for x in p if x > 0)) / (1 - a)


def h2(p, a):
    return mp.diff(lambda t: renyi(p, t), a, 2)


def scan(p, lo=0.01, hi=10.0, n=400):
    grid = [mp.mpf(lo) * (mp.mpf(hi) / lo) ** (mp.mpf(i) / (n - 1)) for i in range(n)]
    grid = [g for g in grid if abs(g - 1) > mp.mpf("1e-6")]
    vals = [h2(p, g) for g in grid]
    roots = []
    for i in range(len(grid) - 1):
        if vals[i] * vals[i + 1] < 0:
            roots.append(mp.findroot(lambda t: h2(p, t), (grid[i], grid[i + 1]), solver="anderson"))
    return roots


FIGS = {
    "fig2": [mp.mpf(1) / 400] * 198 + [mp.mpf(101) / 400] * 2,
    "fig3": [mp.mpf("0.01")] * 10 + [mp.mpf("0.15")] * 2 + [mp.mpf("0.3")] * 2,
    "fig4": [mp.mpf("0.08")] * 10 + [mp.mpf("0.2")],
    "fig5": [mp.mpf("0.0001")] * 100 + [mp.mpf("0.0079")] * 100 + [mp.mpf("0.2")],
}

if __name__ == "__main__":
    for name, p in FIGS.items():
        print(name, "sum", mp.nstr(mp.fsum(p), 20), [mp.nstr(r, 12) for r in scan(p)])
    p1 = [mp.mpf("0.4"), mp.mpf("0.4"), mp.mpf("0.2")]
    print("fig1 min H'' on grid", mp.nstr(min(h2(p1, mp.mpf(0.01) * 1000 ** (mp.mpf(i) / 99)) for i in range(100)), 10))
