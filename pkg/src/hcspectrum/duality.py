from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Tuple

from .arith import Poly, RatFunc, sigma
from .errors import CasimirError, SelfDualityError, WindowOverflowError
from .family import FamilyModule, Generator, WeightWindow, act

LOGGER = logging.getLogger(__name__)


class SignedGenerator(NamedTuple):
    sign: int
    generator: Generator


_SIGMA_SECTIONS = {
    Generator.H: SignedGenerator(-1, Generator.H),
    Generator.E: SignedGenerator(1, Generator.F),
    Generator.F: SignedGenerator(1, Generator.E),
}


def sigma_on_sections(generator: Generator) -> SignedGenerator:
    """Real structure on the Lie algebra sections: H -> -H, E -> F, F -> E."""
    return _SIGMA_SECTIONS[generator]


@dataclass(frozen=True, slots=True)
class TwistedDualModule:
    """Coefficients of the sigma-twisted dual on its basis e_k.

    ``E[k]`` is the coefficient of e_{k+2} in E e_k and ``F[k]`` the
    coefficient of e_{k-2} in F e_k.
    """

    base: FamilyModule
    E: Dict[int, Poly]
    F: Dict[int, Poly]

    @property
    def window(self) -> WeightWindow:
        return self.base.window

    def act(self, generator: Generator, k: int) -> Tuple[int, Poly]:
        window = self.window
        if generator is Generator.H:
            if k not in window:
                raise WindowOverflowError(f"weight {k} lies outside the window")
            return k, Poly.constant(k)
        target = k + 2 if generator is Generator.E else k - 2
        if k not in window or target not in window:
            raise WindowOverflowError(f"{generator.value} e_{k} leaves the window")
        return target, (self.E[k] if generator is Generator.E else self.F[k])

    def as_family(self) -> FamilyModule:
        """Read the dual as a family in its own right (A' = E, B'_k = F_{k+2})."""
        A = dict(self.E)
        B = {k: -sigma_poly(self.base.A[k]) for k in self.window.weights}
        return FamilyModule(casimir=sigma(self.base.casimir), window=self.window, A=A, B=B)


def sigma_poly(p: Poly) -> Poly:
    return p.conjugate()


def twisted_dual(family: FamilyModule) -> TwistedDualModule:
    E = {k: -sigma_poly(family.B[k]) for k in family.window.weights}
    F = {k: -sigma_poly(family.A[k - 2]) for k in family.window.weights if k - 2 in family.window}
    return TwistedDualModule(base=family, E=E, F=F)


def self_dual_condition(family: FamilyModule) -> bool:
    return sigma(family.casimir) == family.casimir


@dataclass(frozen=True, slots=True)
class Intertwiner:
    """Diagonal map f_k -> phi_k e_k from the family to its twisted dual.

    ``steps[k]`` is the ratio phi_k / phi_{k-2} (k > 0) or phi_k / phi_{k+2}
    (k < 0); ``steps[0]`` is phi_0 itself.
    """

    phi: Dict[int, RatFunc]
    steps: Dict[int, RatFunc]

    @property
    def normalization(self) -> RatFunc:
        return self.phi[0]

    def scaled(self, factor: RatFunc) -> "Intertwiner":
        steps = dict(self.steps)
        steps[0] = steps[0] * factor
        return Intertwiner(phi={k: v * factor for k, v in self.phi.items()}, steps=steps)

    def inverse(self) -> "Intertwiner":
        return Intertwiner(
            phi={k: v.inverse() for k, v in self.phi.items()},
            steps={k: v.inverse() for k, v in self.steps.items()},
        )


def intertwiner(family: FamilyModule) -> Intertwiner:
    if not self_dual_condition(family):
        raise SelfDualityError(
            f"no sigma-twisted self-duality: Casimir {family.casimir} is not real on the real axis"
        )
    one = RatFunc.constant(1)
    phi: Dict[int, RatFunc] = {0: one}
    steps: Dict[int, RatFunc] = {0: one}
    bound = family.window.bound
    for k in range(2, bound + 1, 2):
        # A_{k-2} phi_k = -sigma(B_{k-2}) phi_{k-2}
        steps[k] = RatFunc(-sigma_poly(family.B[k - 2]), family.A[k - 2])
        phi[k] = steps[k] * phi[k - 2]
    for k in range(-2, -bound - 1, -2):
        # B_k phi_k = -sigma(A_k) phi_{k+2}
        steps[k] = RatFunc(-sigma_poly(family.A[k]), family.B[k])
        phi[k] = steps[k] * phi[k + 2]
    zeros = sorted(k for k, value in phi.items() if value.is_zero)
    if zeros:
        raise CasimirError(
            f"intertwiner vanishes at weights {zeros}: family is not generically irreducible",
            "not_generically_irreducible",
        )
    LOGGER.info("Built intertwiner on %d weights", len(phi))
    return Intertwiner(phi=dict(sorted(phi.items())), steps=dict(sorted(steps.items())))


def pairing(family: FamilyModule, phi: Intertwiner, j: int, k: int) -> RatFunc:
    """<f_j, f_k> = phi(f_j)(f_k): linear in f_j, sigma-linear in f_k."""
    for weight in (j, k):
        if weight not in family.window:
            raise WindowOverflowError(f"weight {weight} lies outside the window")
    if j != k:
        return RatFunc(Poly())
    return phi.phi[j]


def q_factor(family: FamilyModule, phi: Intertwiner) -> RatFunc:
    """The scalar q with sigma(<f, g>) = q <g, f>; it must satisfy sigma(q) q = 1."""
    q = sigma(phi.phi[0]) / phi.phi[0]
    for k in family.window.weights:
        if sigma(phi.phi[k]) != q * phi.phi[k]:
            raise SelfDualityError(f"hermitian symmetry breaks at weight {k}")
    if sigma(q) * q != 1:
        raise SelfDualityError(f"q = {q} does not satisfy sigma(q) q = 1")
    return q


def hermitian_defects(family: FamilyModule, phi: Intertwiner) -> List[Tuple[int, int]]:
    weights = family.window.weights
    return [
        (j, k)
        for j in weights
        for k in weights
        if sigma(pairing(family, phi, j, k)) != pairing(family, phi, k, j)
    ]


def invariance_defects(family: FamilyModule, phi: Intertwiner) -> List[Tuple[str, int, int]]:
    """(generator, j, k) where <X f_j, f_k> + <f_j, sigma(X) f_k> != 0."""
    window = family.window
    defects: List[Tuple[str, int, int]] = []
    for generator in Generator:
        sign, partner = sigma_on_sections(generator)
        for j in window.weights:
            for k in window.weights:
                try:
                    j_target, a = act(family, generator, j)
                    k_target, b = act(family, partner, k)
                except WindowOverflowError:
                    continue
                left = RatFunc(a) * pairing(family, phi, j_target, k)
                right = sigma(RatFunc(b)) * pairing(family, phi, j, k_target) * sign
                if not (left + right).is_zero:
                    defects.append((generator.value, j, k))
    return defects


def recurrence_defects(family: FamilyModule, phi: Intertwiner) -> List[Tuple[str, int]]:
    window = family.window
    values = phi.phi
    defects: List[Tuple[str, int]] = []
    for k in window.weights:
        if k - 2 in window:
            lhs = RatFunc(family.A[k - 2]) * values[k]
            rhs = -RatFunc(sigma_poly(family.B[k - 2])) * values[k - 2]
            if lhs != rhs:
                defects.append(("A_{k-2} phi_k", k))
        if k + 2 in window:
            lhs = RatFunc(family.B[k]) * values[k]
            rhs = -RatFunc(sigma_poly(family.A[k])) * values[k + 2]
            if lhs != rhs:
                defects.append(("B_k phi_k", k))
    return defects
