"""Exact computation of modular data (S, T) and the Whitehead-link
W-matrix for twisted Drinfeld doubles of the semidirect products
Z_q x| Z_p, together with colored braid-closure invariants and the
equivalence search that separates the five twistings at (q, p, n) =
(11, 5, 4).
"""

from stw.cyclotomic import CycloNumber, root_of_unity

__all__ = ["CycloNumber", "root_of_unity"]

__version__ = "0.1.0"
