# Copyright 2026 The mzqfi Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent brute-force oracle used to derive the frozen expected values
in the C++ unit tests. Builds states with scipy's dense matrix exponential on
truncated single-mode operators (no recurrences, no closed forms) and
evaluates moments and Fisher elements directly.

Run: python3 tests/oracles/derive_values.py
"""
import numpy as np
import mpmath as mp
from scipy.linalg import expm

mp.mp.dps = 30


def ladder(c):
    return np.diag(np.sqrt(np.arange(1, c + 1, dtype=float)), 1).astype(complex)


def single_mode(c, alpha=0.0, z=0.0, phi=0.0, n=None):
    """D(alpha) S(z e^{i phi}) |0> or |n>, built with expm in a padded space."""
    big = c + 60
    a = ladder(big)
    ad = a.conj().T
    vac = np.zeros(big + 1, complex)
    if n is not None:
        vac[n] = 1.0
        return vac[: c + 1]
    vac[0] = 1.0
    zeta = z * np.exp(1j * phi)
    S = expm(0.5 * (np.conj(zeta) * a @ a - zeta * ad @ ad))
    D = expm(alpha * ad - np.conj(alpha) * a)
    return (D @ S @ vac)[: c + 1]


def two_mode(psi0, psi1):
    return np.outer(psi0, psi1)  # index [n0, n1]


def tmsv(c, r, theta):
    amp = np.zeros((c + 1, c + 1), complex)
    for k in range(c + 1):
        amp[k, k] = (-1) ** k / np.cosh(r) * (np.exp(1j * theta) * np.tanh(r)) ** k
    return amp


def fisher_after_bs(amp, t):
    """Apply e^{i theta Jx} by expm on each fixed-N sector of the two-mode
    space and return (F_ss, F_dd, F_sd, F_i, F_i_upper)."""
    c = amp.shape[0] - 1
    vth = 2 * np.arccos(t)
    norm = np.sum(np.abs(amp) ** 2)
    m = {k: 0.0 for k in ("N", "NN", "D", "DD", "ND", "n0", "n00", "n1", "n11")}
    for N in range(2 * c + 1):
        ks = np.arange(N + 1)
        vec = np.array([amp[k, N - k] if k <= c and N - k <= c else 0 for k in ks], complex)
        if not np.any(vec):
            continue
        # Jx in basis |k, N-k>, k = n0: a0^dag a1 |k,N-k> = sqrt((k+1)(N-k)) |k+1,N-k-1>
        J = np.zeros((N + 1, N + 1))
        for k in range(N):
            v = 0.5 * np.sqrt((k + 1) * (N - k))
            J[k + 1, k] = v
            J[k, k + 1] = v
        out = expm(1j * vth * J) @ vec
        p = np.abs(out) ** 2 / norm
        n0 = ks; n1 = N - ks; D = n0 - n1
        m["N"] += N * p.sum(); m["NN"] += N * N * p.sum()
        m["D"] += (p * D).sum(); m["DD"] += (p * D * D).sum(); m["ND"] += N * (p * D).sum()
        m["n0"] += (p * n0).sum(); m["n00"] += (p * n0 * n0).sum()
        m["n1"] += (p * n1).sum(); m["n11"] += (p * n1 * n1).sum()
    fss = m["NN"] - m["N"] ** 2
    fdd = m["DD"] - m["D"] ** 2
    fsd = m["ND"] - m["N"] * m["D"]
    return fss, fdd, fsd, 4 * (m["n11"] - m["n1"] ** 2), 4 * (m["n00"] - m["n0"] ** 2)


def moments(psi):
    c = len(psi) - 1
    a = ladder(c)
    ad = a.conj().T
    nn = ad @ a
    e = lambda op: np.vdot(psi, op @ psi) / np.vdot(psi, psi)
    mean_a = e(a)
    mean_n = e(nn).real
    var_n = e(nn @ nn).real - mean_n**2
    cov_an = e(ad @ nn) - np.conj(mean_a) * mean_n
    return mean_a, e(a @ a), mean_n, var_n, cov_an


print("== squeezed-coherent |alpha|=10, z=0.6, phi=0 (closed form, mpmath)")
al, z = mp.mpf(10), mp.mpf("0.6")
print("mean_n", mp.nstr(al**2 + mp.sinh(z) ** 2, 17))
print("var_n", mp.nstr(mp.sinh(2 * z) ** 2 / 2 + al**2 * mp.e ** (-2 * z), 17))

print("== scaled variant |alpha|=2, z=0.6 by brute force vs closed form")
psi = single_mode(60, alpha=2.0, z=0.6, phi=0.0)
ma, ma2, mn, vn, can = moments(psi)
al2 = mp.mpf(2)
print("brute mean_n", repr(mn), "closed", mp.nstr(al2**2 + mp.sinh(z) ** 2, 17))
print("brute var_n", repr(vn), "closed", mp.nstr(mp.sinh(2 * z) ** 2 / 2 + al2**2 * mp.e ** (-2 * z), 17))
print("brute mean_a2", ma2, "closed", 4 - 0.5 * float(mp.sinh(1.2)))
alpha_c = 1.3 * np.exp(0.7j)
psi = single_mode(60, alpha=alpha_c, z=0.8, phi=-1.1)
ma, ma2, mn, vn, can = moments(psi)
zz = 0.8
print("brute cov_an (alpha=1.3e^{0.7i}, z=0.8, phi=-1.1)", can,
      "closed", np.conj(alpha_c) * np.sinh(zz) ** 2 - alpha_c / 2 * np.sinh(2 * zz) * np.exp(1.1j))
print("brute mean_a2", ma2, "closed", alpha_c**2 - 0.5 * np.sinh(2 * zz) * np.exp(-1.1j))

print("== TMSV r=2")
r = mp.mpf(2)
print("mean_n", mp.nstr(mp.sinh(r) ** 2, 17), "cov", mp.nstr(mp.sinh(2 * r) ** 2 / 4, 17))
print("F2p max 4 sinh^2 cosh^2", mp.nstr(4 * mp.sinh(r) ** 2 * mp.cosh(r) ** 2, 17))
print("qcrb", mp.nstr(1 / mp.sqrt(4 * mp.sinh(r) ** 2 * mp.cosh(r) ** 2), 17))
r = mp.mpf("0.8")
print("TMSV r=0.8 cov", mp.nstr(mp.sinh(2 * r) ** 2 / 4, 17))

print("== brute-force Fisher elements (expm beam splitter)")
cases = {
    "coh(1.2e^{0.4i})|sqzvac(0.5,0.3)": two_mode(single_mode(70, z=0.5, phi=0.3),
                                                 single_mode(70, alpha=1.2 * np.exp(0.4j))),
    "sqzcoh(0.9e^{-0.5i},0.4,1.0)|coh(0.7e^{1.1i})": two_mode(single_mode(70, alpha=0.7 * np.exp(1.1j)),
                                                              single_mode(70, alpha=0.9 * np.exp(-0.5j), z=0.4, phi=1.0)),
    "tmsv(0.6,0.5)": tmsv(70, 0.6, 0.5),
    "fock1|vac": two_mode(single_mode(4, n=0), single_mode(4, n=1)),
}
for name, amp in cases.items():
    for t in (0.3, 1 / np.sqrt(2), 0.9):
        fss, fdd, fsd, fi, fiu = fisher_after_bs(amp, t)
        print(f"{name} t={t:.17g}: Fss={fss:.15g} Fdd={fdd:.15g} Fsd={fsd:.15g} Fi={fi:.15g} Fiu={fiu:.15g}")

print("== Fig5 optimum T^2 for PMC 0 and 0.15pi")
for pmc in (0, 0.15):
    mean = al**2 + mp.sinh(z) ** 2
    var = mp.sinh(2 * z) ** 2 / 2 + al**2 * (mp.cosh(2 * z) - mp.sinh(2 * z) * mp.cos(pmc * mp.pi))
    print(pmc, "T^2 =", mp.nstr(mean / (2 * (mean - var)), 17), "Fmax =", mp.nstr(mean**2 / (mean - var), 17))

print("== PMC3 squeezed-coherent pair |alpha|=3 |beta|=2 r=0.9 z=0.5")
A_, B_, r_, z_ = 3.0, 2.0, 0.9, 0.5
sh, ch = np.sinh, np.cosh
Vp = sh(2 * r_) ** 2 / 2 + B_**2 * np.exp(2 * r_) + sh(2 * z_) ** 2 / 2 + A_**2 * np.exp(2 * z_)
Vm = sh(2 * r_) ** 2 / 2 + B_**2 * np.exp(2 * r_) - sh(2 * z_) ** 2 / 2 - A_**2 * np.exp(2 * z_)
Aco = 4 * (B_**2 * np.exp(2 * z_) + A_**2 * np.exp(2 * r_) + sh(r_ + z_) ** 2)
# The sinh(2z) term carries the opposite sign of the +/- label once the general
# expression is evaluated at these phases; the brute-force F_i below confirms it.
Sp = 2 * A_ * B_ * (2 * (sh(r_) ** 2 - sh(z_) ** 2) + sh(2 * r_) - sh(2 * z_))
Sm = 2 * A_ * B_ * (2 * (sh(r_) ** 2 + sh(z_) ** 2) + sh(2 * r_) + sh(2 * z_))
P = 4 * A_ * B_
print("shorthand: Vp", repr(Vp), "Vm", repr(Vm), "A", repr(Aco), "S+", repr(Sp), "S-", repr(Sm), "P", repr(P))
C = [2 * Vp, Aco - 4 * Vp, -2 * Sp, -2 * Vm, 2 * (P + Sm)]
print("C'", [repr(x) for x in C])
# brute force from Fock states: port1 (alpha e^{i 0}, z, phi=pi), port0 (beta e^{-i pi/2}, r, theta=0)
amp = two_mode(single_mode(100, alpha=2.0 * np.exp(-0.5j * np.pi), z=0.9, phi=0.0),
               single_mode(100, alpha=3.0, z=0.5, phi=np.pi))
for t in (0.4, 0.8):
    print("brute PMC3 t", t, fisher_after_bs(amp, t))
    x = t * np.sqrt(1 - t * t); cdiff = 2 * t * t - 1
    print("   analytic F_i from C'", C[0] + C[1] * x * x + C[2] * x * cdiff + C[3] * cdiff + C[4] * x)

def Fi(t):
    x = t * np.sqrt(1 - t * t); cdiff = 2 * t * t - 1
    return C[0] + C[1] * x * x + C[2] * x * cdiff + C[3] * cdiff + C[4] * x
quart = [16 * (C[1] ** 2 + 4 * C[2] ** 2), 16 * (4 * C[2] * C[3] + C[1] * C[4]),
         4 * (4 * C[3] ** 2 - 4 * C[2] ** 2 - C[1] ** 2 + C[4] ** 2), -4 * (2 * C[2] * C[3] + C[1] * C[4]),
         C[2] ** 2 - C[4] ** 2]
print("quartic coeffs", [repr(q) for q in quart])
print("numpy roots", np.roots(quart))
ts = np.linspace(0, 1, 1_000_001)
f = Fi(ts)
k = np.argmax(f)
print("dense argmax t", repr(ts[k]), "F", repr(f[k]))
# derivative sign changes with respect to chi on each branch
for branch, sel in (("T^2<1/2", ts < np.sqrt(0.5)), ("T^2>1/2", ts > np.sqrt(0.5))):
    tt = ts[sel]; ff = f[sel]; chi = tt * np.sqrt(1 - tt * tt)
    d = np.diff(ff) / np.diff(chi)
    idx = np.where(np.sign(d[1:]) != np.sign(d[:-1]))[0]
    print(branch, "stationary chi", [repr(chi[i + 1]) for i in idx])
