"""Independent reference values for the C++ test suites.

Builds the three-mode state as a plain numpy vector, reduces it with einsum,
and evaluates every measure with LAPACK (numpy.linalg) and mpmath. None of
the C++ code paths are reused. Run:  python3 tests/oracle/reference_values.py
"""
import mpmath as mp
import numpy as np
import scipy.linalg

mp.mp.dps = 40


def factors(omega, temperature):
    if temperature == 0:
        return 1.0, 0.0
    x = omega / temperature
    return float((mp.e ** (-x) + 1) ** -0.5), float((mp.e ** x + 1) ** -0.5)


def state(alpha2, omega, temperature):
    fm, fp = factors(omega, temperature)
    a = np.sqrt(alpha2)
    psi = np.zeros(8)
    psi[0], psi[3], psi[6] = a * fm, a * fp, np.sqrt(1 - alpha2)
    return psi


def reduce(psi, pair):
    t = np.outer(psi, psi).reshape([2] * 6)
    spec = {"A_I": "abxcdx->abcd", "A_II": "axbcxd->abcd", "I_II": "xabxcd->abcd"}[pair]
    return np.einsum(spec, t).reshape(4, 4)


def entropy(rho):
    w = np.linalg.eigvalsh(rho)
    w = w[w > 1e-300]
    return float(-(w * np.log2(w)).sum())


def marginals(rho):
    t = rho.reshape(2, 2, 2, 2)
    return np.einsum("abcb->ac", t), np.einsum("abad->bd", t)


def concurrence(rho):
    # Singular values of sqrt(rho) Y conj(sqrt(rho)) are the square roots of
    # the eigenvalues of rho rho~; SVD avoids squaring away the small ones.
    y = np.array([[0, -1j], [1j, 0]])
    yy = np.kron(y, y)
    root = scipy.linalg.sqrtm(rho)
    r = np.linalg.svd(root @ yy @ root.conj(), compute_uv=False)
    return max(0.0, r[0] - r[1:].sum())


def eof(c):
    x = (1 + np.sqrt(1 - c * c)) / 2
    return -sum(p * np.log2(p) for p in (x, 1 - x) if p > 0)


def min_pt(rho):
    pt = rho.reshape(2, 2, 2, 2).transpose(2, 1, 0, 3).reshape(4, 4)
    return np.linalg.eigvalsh(pt).min()


if __name__ == "__main__":
    np.set_printoptions(precision=15)
    a2, w, t = 0.5, 1.0, 1.0
    print("factors(1,1)", factors(w, t))
    psi = state(a2, w, t)
    print("amplitudes", psi[[0, 3, 6]])
    for pair in ("A_I", "A_II", "I_II"):
        rho = reduce(psi, pair)
        m1, m2 = marginals(rho)
        c = concurrence(rho)
        print(pair, "C=%.12f EoF=%.12f MI=%.12f minPT=%.12f" % (
            c, eof(c), entropy(m1) + entropy(m2) - entropy(rho), min_pt(rho)))
        print(rho)
    rho_ai = reduce(psi, "A_I")
    print("S(rho_I) from A_I", entropy(marginals(rho_ai)[1]))
    h = lambda p: float(-p * mp.log(p, 2) - (1 - p) * mp.log(1 - p, 2))
    print("MI_I_II(T->inf, alpha2=.5)", 2 * h(0.25) - h(0.5))
    print("block eig", np.linalg.eigvalsh(np.array([[0, 0.427511], [0.427511, 0.134471]])))
    print("M=1 temperature", 1 / (8 * np.pi))
