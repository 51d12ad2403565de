# SPDX-FileCopyrightText: Copyright (c) 2026 The atomprior Authors
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerate tests/data/descriptor_golden.csv with RDKit.

Run once; the CSV is checked in and the C++ tests never call Python.

    python3 scripts/make_descriptor_golden.py data/chembl_drugs.csv > tests/data/descriptor_golden.csv
"""

import csv
import random
import sys

from rdkit import Chem
from rdkit.Chem import Crippen, Descriptors, rdMolDescriptors, rdPartialCharges

HAND_PICKED = [
    "CCO",
    "c1ccccc1",
    "c1ccncc1",
    "CC(=O)N",
    "CC(=O)Oc1ccccc1C(=O)O",
    "Cn1cnc2c1c(=O)n(C)c(=O)n2C",
    "CC(C)Cc1ccc(cc1)C(C)C(=O)O",
    "CC(=O)Nc1ccc(O)cc1",
    "c1ccc2[nH]ccc2c1",
    "c1ccoc1",
    "c1ccsc1",
    "c1c[nH]cn1",
    "c1ccc2ncccc2c1",
    "CC#N",
    "C[N+](=O)[O-]",
    "CS(=O)(=O)N",
    "CS(C)=O",
    "OP(=O)(O)O",
    "C[NH3+]",
    "CC(=O)[O-]",
    "C[N+](C)(C)C",
    "FC(F)(F)c1ccc(Cl)cc1Br",
    "Ic1ccccc1",
    "CCOC(=O)C",
    "C1CCC2(CC1)OCCO2",
    "O=C1CCCN1",
    "NC(=N)N",
    "C=CC=O",
    "C#CC",
    "OB(O)c1ccccc1",
    "O=c1cc[nH]cc1",
    "Nc1ncnc2[nH]cnc12",
    "CC(C)(C)OC(=O)NCC(=O)O",
    "Fc1cc(cc(F)c1)CC(NC(=O)C)C(O)C[NH2+]C1(CCCCC1)c1cc(ccc1)C1CCOC1",
    "COc1ccc2c3c1O[C@H]1[C@@H](O)C=C[C@H]4[C@@H](C2)NCC[C@]314",
]


def pick_chembl(path, n, seed=7):
    with open(path) as fh:
        rows = [r[0] for r in csv.reader(fh)][1:]
    rng = random.Random(seed)
    rng.shuffle(rows)
    out = []
    for smi in rows:
        if "[H]" in smi or len(smi) > 70:
            continue
        mol = Chem.MolFromSmiles(smi)
        if mol is None:
            continue
        if any(a.GetSymbol() not in {"C", "N", "O", "S", "P", "F", "Cl", "Br", "I"} for a in mol.GetAtoms()):
            continue
        out.append(smi)
        if len(out) == n:
            break
    return out


def main():
    smiles = list(HAND_PICKED)
    if len(sys.argv) > 1:
        smiles += pick_chembl(sys.argv[1], 50 - len(smiles))
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["smiles", "descriptor_name", "value"])
    for smi in smiles:
        mol = Chem.MolFromSmiles(smi)
        w.writerow([smi, "MolWt", repr(Descriptors.MolWt(mol))])
        w.writerow([smi, "TPSA", repr(rdMolDescriptors.CalcTPSA(mol))])
        w.writerow([smi, "LogP", repr(Crippen.MolLogP(mol))])
        rdPartialCharges.ComputeGasteigerCharges(mol)
        for atom in mol.GetAtoms():
            q = atom.GetDoubleProp("_GasteigerCharge")
            w.writerow([smi, "gasteiger[%d]" % atom.GetIdx(), repr(q)])


if __name__ == "__main__":
    main()
