#!/usr/bin/env python3
"""High-precision reference values frozen into the C++ tests.

Run with mpmath installed; output is one `name = value` line per quantity.
"""

import mpmath as mp

mp.mp.dps = 40


def show(name, value):
    if isinstance(value, mp.mpc):
        print(f"{name} = {mp.nstr(value.real, 17)} {mp.nstr(value.imag, 17)}i")
    else:
        print(f"{name} = {mp.nstr(value, 17)}")


def kernel_sine(a):
    return mp.quad(lambda b: mp.sin(a * b) / mp.expm1(2 * mp.pi * b), [0, 1, 5, mp.inf])


def main():
    for s in [3, 0.5, mp.mpc(0.5, 3), mp.mpc(-3.5, 2), mp.mpc(20, 1), mp.mpc(0.75, 40), mp.mpc(0.25, 100)]:
        show(f"zeta({mp.nstr(s, 6)})", mp.zeta(s))
    for s in [2, 0, mp.mpc(0.3, 7)]:
        show(f"zeta'({mp.nstr(s, 6)})", mp.zeta(s, derivative=1))

    for z in [mp.mpc(3, 4), mp.mpc(0.25, 50), mp.mpc(-2.5, 1), mp.mpf(0.5), mp.mpc(0.001, 100),
              mp.mpc(-7.3, -0.2), mp.mpc(150, 30)]:
        show(f"loggamma({mp.nstr(z, 6)})", mp.loggamma(z))

    for t in [0, 1, 5, 10, 25, 50]:
        show(f"Z({t})", mp.siegelz(t))
    for t in [1, 10, 14.1347251, 50, 100, 200]:
        show(f"theta({t})", mp.siegeltheta(t))
    for k in range(1, 12):
        show(f"zero_{k}", mp.zetazero(k).imag)

    for x in [0.5, 1]:
        show(f"todd_kernel({x})", 1 / mp.expm1(2 * mp.pi * x))
    show("L_1(1)", -mp.nsum(lambda k: mp.exp(-2 * mp.pi * k) / (2 * mp.pi * k), [1, mp.inf]))
    for a in [0.1, mp.log(2), 1, 5, 50]:
        show(f"kernel_sine({mp.nstr(a, 8)})", kernel_sine(a))
    show("e^e", mp.e ** mp.e)
    show("geometric(1)", 1 / (1 - mp.exp(-1)))
    show("geometric(2)", 1 / (1 - mp.exp(-2)))
    show("M16[exp(-z)]", 1j * mp.quad(lambda x: (mp.exp(-1j * x) - mp.exp(1j * x)) / mp.expm1(2 * mp.pi * x),
                                      [0, 1, mp.inf]))

    for q in [2, 3, 5, 97]:
        b = 2 * mp.pi * q / mp.log(q)
        show(f"b(q={q})", b)
        show(f"|zeta(1/2+ib)| q={q}", abs(mp.zeta(mp.mpc(0.5, b))))
    b0 = mp.mpf("14.1347251417")
    show("|zeta| control", abs(mp.zeta(mp.mpc(0.5, b0))))
    show("boundary integral at sigma=0",
         1j * mp.quad(lambda x: (mp.zeta(mp.mpc(0, x)) - mp.zeta(mp.mpc(0, -x))) / mp.expm1(2 * mp.pi * x),
                      [0, 1, 3, 8]))
    show("int_0^1 zeta(sigma+ib)", mp.quad(lambda s: mp.zeta(mp.mpc(s, b0)), [0, 0.5, 1]))
    for sigma in [0, 0.25, 0.5, 0.75, 1]:
        show(f"|zeta({sigma}+ib)|", abs(mp.zeta(mp.mpc(sigma, b0))))
    show("twin delta gamma q=3", 2 * mp.log(3) + 2 + 2 / mp.log(3))


if __name__ == "__main__":
    main()
