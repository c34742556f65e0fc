#!/usr/bin/env python3
"""Regenerates the FCIDUMP fixtures under data/fcidump.

Requires pyscf. Integrals are RHF canonical molecular orbitals in STO-3G,
written in the chemist-notation FCIDUMP convention with 8-fold symmetry.
"""
import os
import sys

from pyscf import gto, scf
from pyscf.tools import fcidump

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "fcidump")


def dump(atom, path):
    mol = gto.M(atom=atom, basis="sto-3g", unit="Angstrom", symmetry=False, verbose=0)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    if not mf.converged:
        sys.exit(f"RHF did not converge for {path}")
    fcidump.from_scf(mf, path, tol=1e-14)
    print(f"{path}: E_RHF = {mf.e_tot:.12f}")


def main():
    dump("H 0 0 0; H 0 0 0.7414", os.path.join(ROOT, "h2_sto3g.fcidump"))
    dump("H 0 0 0; H 0 0 1.0; H 0 0 2.0; H 0 0 3.0", os.path.join(ROOT, "h4_chain_sto3g.fcidump"))
    dump("Li 0 0 0; H 0 0 1.5949", os.path.join(ROOT, "lih_sto3g.fcidump"))
    for r in (0.60, 0.90, 1.20):
        dump(f"H 0 0 0; H 0 0 {r}", os.path.join(ROOT, "h2_stretch", f"r{r:.2f}.fcidump"))


if __name__ == "__main__":
    main()
