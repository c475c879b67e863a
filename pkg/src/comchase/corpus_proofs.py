"""Shipped proof scripts for the standard corpus.

The monomorphism proof follows the textbook argument: paste the triangle
diagram onto the bound parallel-pair diagram along their shared edge,
saturate the glued diagram with composites, transport the commuting-triangle
premises onto it, and discharge the instantiated monomorphism premise with
commutativity automation.  The epimorphism statement is proved by the
pointwise-dual script.
"""

from __future__ import annotations

from .formulas import epi_mepiPF, mono_monomPF
from .kernel import Biproof, LemmaRegistry, Proof, dual_proof
from .textio import parse_proof

MONO_MONOM_SCRIPT = """\
intro
intro_imply
intro_imply
intro
intro_imply
intro_imply
intro_imply
paste 2
rewrite 5 <- occ 1
saturate 0
have commute(restr([1,2,3];[3,4,5], $0)) {
  rewrite 6 -> occ 1
  assumption 0
}
have commute(restr([0,1,2];[0,2,3], $0)) {
  rewrite 5 -> occ 1
  assumption 3
}
have commute(restr([0,1,2];[1,2,3], $0)) {
  rewrite 5 -> occ 1
  assumption 4
}
specialize 1 restr([0,1,3];[0,1,10,4], $0)
have restr([1,3];[4], $0) == restr([0,2];[1], $2) {
  rewrite 6 <- occ 1
  eqd_refl
}
detach 1 16
have commute(restr([0,1,3];[0,10,4], $0)) {
  comauto
}
detach 1 17
have commute(restr([0,1,3];[1,10,4], $0)) {
  comauto
}
detach 1 18
assumption 1
"""


def mono_monom_proof() -> Proof:
    return parse_proof(MONO_MONOM_SCRIPT)


def epi_mepi_proof() -> Proof:
    return dual_proof(mono_monom_proof())


EPI_MEPI_SCRIPT_NOTE = "the dual script is derived pointwise from the primal one"


def mono_monom_biproof() -> Biproof:
    return Biproof(mono_monom_proof(), epi_mepi_proof())


def standard_registry() -> LemmaRegistry:
    """Registry preloaded with the corpus lemmas."""
    reg = LemmaRegistry()
    reg.register("mono_monom", mono_monomPF, mono_monom_proof(), epi_mepi_proof())
    return reg
