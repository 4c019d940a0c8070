"""Extended-precision reference values behind the expected numbers in the Rust tests.

Run with `python3 oracles/derive_values.py` (needs mpmath). Nothing here
calls the Rust code; each value comes from direct evaluation, quadrature or
root finding at 40 digits.
"""
from mpmath import mp, mpf, sin, cos, log, tan, cot, sqrt, pi, quad, taylor, diff, findroot

mp.dps = 40

def f(t):
    return (2*log(2) - (cos(t)+1)*log(cos(t)+1))/sin(t)

def g(t):
    return 2*log(2) - (cos(t)+1)*log(cos(t)+1)

def h(t):
    return sin(t) + log(cos(t)+1)*sin(t)

def f_m(t):
    return log(2)*tan(t/2) - 2*cot(t/2)*log(cos(t/2))

print("2ln2", 2*log(2))
print("f(pi/4)", f(pi/4), "mform", f_m(pi/4))
print("g(pi/4)", g(pi/4))
print("h(pi/4)", h(pi/4))
print("(1+ln2)/2", (1+log(2))/2, " minus 1:", (1+log(2))/2 - 1)
print("f(1e-9)", f(mpf('1e-9')))
# Taylor of f via the half-angle form, which is analytic at 0
fm_series = taylor(f_m, mpf('1e-25'), 7)
print("taylor coeffs near 0:", [mp.nstr(x, 20) for x in fm_series])
print("closed coefs: ", (1+log(2))/2, (2*log(2)-1)/48, (4*log(2)-1)/960)
print("beta(0.5)", 2*mpf('0.5')/(1+sqrt(1-mpf('0.25'))))
print("f(pi/4)/(2ln2)", f(pi/4)/(2*log(2)))
print("f(pi/3)/(2ln2)", f(pi/3)/(2*log(2)), "f(pi/6)/(2ln2)", f(pi/6)/(2*log(2)))
print("gap pi/4", log(2) - f(pi/4))
slope = 2*log(2)/(pi/2)
tstar = findroot(lambda t: diff(f, t) - slope, 0.8)
print("max gap at", tstar, "gap", slope*tstar - f(tstar))
def S(fun, dfun):
    return 2*pi*quad(lambda t: ((dfun(t)-1)**2 + (fun(t)/sin(t)-1)**2)*sin(t), [0, pi/2])
print("S(f*)", S(f, lambda t: diff(f, t)))
for cc in ['0.8', '0.9', '1.0', '1.1']:
    cc = mpf(cc)
    print("S(%s id)" % cc, S(lambda t: cc*t, lambda t: cc))
print("S(sin)", S(sin, cos), "2pi/3", 2*pi/3)
print("rho id pi/4", (pi/4)/sin(pi/4) - 1)
# Euler-Lagrange residual of f = θ: sinθ·cosθ − θ − (sinθ·cosθ − sinθ)
print("resid id pi/4", sin(pi/4) - pi/4)
# f'' sign check (convexity) on a grid
print("min f'' on grid", min(diff(f, mpf(k)/100*pi/2, 2) for k in range(1, 101)))
print("f'(pi/2)", diff(f, pi/2))
