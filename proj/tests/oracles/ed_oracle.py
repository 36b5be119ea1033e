"""Full tensor-product exact diagonalization of the JCH chain (scipy.sparse).

Builds the Hamiltonian on the complete (2*(n_max+1))**L Hilbert space with
Kronecker products, then restricts to a fixed total-excitation sector by
masking on the diagonal of the excitation-number operator. Shares no code
with the C++ sector-basis assembly; values printed here are frozen into
tests/test_ed_oracle.cpp.
"""
import sys
import numpy as np
import scipy.sparse as sp


def local_ops(nmax):
    nb = nmax + 1
    a = np.diag(np.sqrt(np.arange(1, nb)), 1)      # boson annihilation
    sm = np.array([[0.0, 1.0], [0.0, 0.0]])         # |down><up| with basis (down, up)
    ib, iq = np.eye(nb), np.eye(2)
    A = np.kron(a, iq)
    Sm = np.kron(ib, sm)
    nq = np.kron(ib, np.diag([0.0, 1.0]))
    return A, Sm, nq


def site_op(op, j, L):
    d = op.shape[0]
    out = sp.identity(1, format="csr")
    for k in range(L):
        out = sp.kron(out, sp.csr_matrix(op) if k == j else sp.identity(d), format="csr")
    return out


def hamiltonian(L, nmax, wc, wz, g, J, periodic=True):
    A, Sm, nq = local_ops(nmax)
    a = [site_op(A, j, L) for j in range(L)]
    sm = [site_op(Sm, j, L) for j in range(L)]
    q = [site_op(nq, j, L) for j in range(L)]
    H = 0
    for j in range(L):
        H = H + wc * a[j].T @ a[j] + wz * q[j] + g * (a[j].T @ sm[j] + sm[j].T @ a[j])
    bonds = [(j, j + 1) for j in range(L - 1)]
    if periodic and L > 1:
        bonds.append((L - 1, 0))
    for i, k in bonds:
        H = H - J * (a[i].T @ a[k] + a[k].T @ a[i])
    N = sum(a[j].T @ a[j] + q[j] for j in range(L))
    return H.tocsr(), np.rint(N.diagonal()).astype(int)


def sector_ground(L, nmax, wc, wz, g, J, Ntot, periodic=True):
    H, N = hamiltonian(L, nmax, wc, wz, g, J, periodic)
    idx = np.where(N == Ntot)[0]
    return np.linalg.eigvalsh(H[idx][:, idx].toarray())[0], len(idx)


if __name__ == "__main__":
    np.set_printoptions(precision=17)
    for (L, nmax, J, per) in [(3, 2, 0.1, True), (3, 2, 0.1, False), (4, 3, 0.1, True),
                              (4, 3, 0.15, True), (4, 4, 0.15, True), (2, 2, 0.2, True)]:
        for Ntot in (L - 1, L, L + 1):
            e, dim = sector_ground(L, nmax, 0.0, 0.0, 1.0, J, Ntot, per)
            print(f"L={L} nmax={nmax} J={J} periodic={per} N={Ntot} dim={dim} E0={e:.15f}")
