"""Decomposition of flagged RPPs into Demazure crystals, checked instance by instance.

``verify_main_theorem`` groups Re(shape, flag) by Burge recording tableau,
matches every block against a Demazure crystal, and cross-checks the match
through the Omega / Psi maps, key expansion, and the height-slice route.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product

from .crystal import (
    CrystalSet, RppCrystal, TableauCrystal, character, demazure_generate,
    demazure_match, height_slices, verify_demazure_union,
)
from .insertion import Biword, burge, burge_inverse, insertion_tableau, knuth_class
from .keypoly import grothendieck_poly, key_expand, key_polynomial
from .polynomial import Polynomial
from .shapes import (
    Rpp, SkewShape, Ssyt, Word, check_composition, check_flag, enumerate_rpps,
    enumerate_rpps_m, flagged_schur, height, highest_weight_tableau, key_tableau,
    reading_word, weight,
)

VERIFIED, FALSIFIED, SKIPPED = "verified", "falsified", "skipped-too-large"


def is_yamanouchi(w) -> bool:
    counts: dict[int, int] = {}
    for x in reversed(tuple(w)):
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def b_word(alpha) -> Word:
    alpha = check_composition(alpha)
    return tuple(j for j in range(len(alpha), 0, -1) for _ in range(alpha[j - 1]))


def height_word_array(T: Rpp) -> Biword:
    """The two-rowed array [h(T); r_T]."""
    return Biword(height(T), reading_word(T))


def recording_tableau(T: Rpp) -> Ssyt:
    return burge(height_word_array(T))[1]


def left_key(Q: Ssyt) -> Ssyt:
    """Left key by scanning: each entry walks leftwards, taking the largest
    entry no bigger than itself in every earlier column."""
    cols = Q.columns()
    if not cols:
        return Q
    key = [list(cols[0])]
    for i in range(1, len(cols)):
        left = [list(c) for c in cols[:i]]
        new_col = []
        for x in reversed(cols[i]):
            val = x
            trimmed = []
            for col in reversed(left):
                j = bisect_right(col, val) - 1
                val = col[j]
                trimmed.insert(0, col[:j])
            left = trimmed
            new_col.insert(0, val)
        key.append(new_col)
    return Ssyt.from_columns(key)


def _row_words(length: int, bound: int):
    return combinations_with_replacement(range(1, bound + 1), length)


def is_maximal_factorization(blocks) -> bool:
    nonempty = [b for b in blocks if b]
    return all(a[-1] > b[0] for a, b in zip(nonempty, nonempty[1:]))


def enumerate_W(alpha, flag) -> frozenset[Word]:
    """Words v_n ... v_1 with |v_i| = alpha_i, v_i a row word bounded by flag_i,
    maximal between neighbouring non-empty blocks, recording key(alpha)."""
    flag = check_flag(flag)
    alpha = check_composition(alpha, len(flag))
    return _enumerate_W(alpha, flag)


@lru_cache(maxsize=None)
def _enumerate_W(alpha, flag):
    n = len(flag)
    top = b_word(alpha)
    target = key_tableau(alpha)
    choices = [list(_row_words(alpha[i - 1], flag[i - 1])) for i in range(n, 0, -1)]
    out = set()
    for blocks in product(*choices):
        if not is_maximal_factorization(blocks):
            continue
        v = tuple(x for b in blocks for x in b)
        if burge(Biword(top, v))[1] == target:
            out.add(v)
    return frozenset(out)


def omega(T: Rpp, Q: Ssyt) -> Word:
    """Bottom row of burge_inverse(P(r_T), left key of Q), in display order."""
    P, rec = burge(height_word_array(T))
    if rec != Q:
        raise ValueError(f"{T} is not recorded by {Q}")
    return burge_inverse(P, left_key(Q)).bottom


def psi(T: Rpp, Q: Ssyt) -> Ssyt:
    return insertion_tableau(omega(T, Q))


@dataclass(frozen=True)
class DeskLimits:
    max_n: int = 4
    max_size: int = 8
    max_cells: int = 6

    def admits(self, shape: SkewShape, flag) -> bool:
        return (len(flag) <= self.max_n and sum(shape.outer) <= self.max_size
                and shape.size <= self.max_cells)


UNLIMITED = DeskLimits(10**9, 10**9, 10**9)


@dataclass
class Block:
    Q: Ssyt
    members: tuple[Rpp, ...]
    n: int
    h0: Word | None = None
    witness: Rpp | None = None
    sigma: object = None
    nu: tuple[int, ...] | None = None
    beta_hat: tuple[int, ...] | None = None
    beta: tuple[int, ...] | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    observations: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def crystal(self) -> CrystalSet:
        return CrystalSet(self.members, RppCrystal(self.n), "e-closed")

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def check(self, name: str, value: bool, witness: str = ""):
        self.checks[name] = bool(value)
        if not value:
            self.failures.append(f"{name}: {witness}" if witness else name)

    def to_json(self) -> dict:
        return {
            "Q": self.Q.to_json(),
            "size": len(self.members),
            "members": [str(T) for T in self.members],
            "h0": list(self.h0) if self.h0 is not None else None,
            "yamanouchi_witness": self.witness.to_json() if self.witness else None,
            "sigma": list(self.sigma.oneline) if self.sigma is not None else None,
            "nu": list(self.nu) if self.nu is not None else None,
            "beta_hat": list(self.beta_hat) if self.beta_hat is not None else None,
            "beta": list(self.beta) if self.beta is not None else None,
            "checks": dict(sorted(self.checks.items())),
            "observations": dict(sorted(self.observations.items())),
            "failures": self.failures,
        }


def _q_key(Q: Ssyt):
    return (Q.shape, Q.rows)


def partition_by_Q(shape: SkewShape, flag) -> list[Block]:
    """Group Re(shape, flag) by the recording tableau of [h(T); r_T]."""
    flag = check_flag(flag)
    groups: dict[Ssyt, list[Rpp]] = {}
    for T in enumerate_rpps(shape, flag):
        groups.setdefault(recording_tableau(T), []).append(T)
    blocks = []
    for Q in sorted(groups, key=_q_key):
        b = Block(Q, tuple(groups[Q]), len(flag))
        heights = {height(T) for T in b.members}
        b.check("constant_height", len(heights) == 1, f"heights {sorted(heights)}")
        b.h0 = min(heights)
        yam = [T for T in b.members if is_yamanouchi(reading_word(T))]
        b.check("unique_yamanouchi_witness", len(yam) == 1, f"{len(yam)} Yamanouchi members")
        if yam:
            b.witness = yam[0]
        blocks.append(b)
    return blocks


def find_compatible_tableaux(shape: SkewShape, flag) -> list[tuple[Ssyt, Rpp]]:
    """All (Q, T0) with T0 flagged, r_{T0} Yamanouchi, and Q the recording tableau of T0."""
    flag = check_flag(flag)
    out = []
    for T in enumerate_rpps(shape, flag):
        if is_yamanouchi(reading_word(T)):
            P, Q = burge(height_word_array(T))
            nu = weight(T)
            if P != highest_weight_tableau(nu) or Q.shape != tuple(p for p in nu if p):
                raise AssertionError(f"Yamanouchi filling {T} does not insert to T_nu")
            out.append((Q, T))
    return sorted(out, key=lambda qt: _q_key(qt[0]))


def compute_beta_hat(block: Block) -> tuple[int, ...] | None:
    """Match the block to a Demazure crystal; beta_hat = sigma . nu.
    Cross-checked against the key expansion of the block's character."""
    S = block.crystal
    match = demazure_match(S)
    block.check("demazure_match", match is not None, f"block of {block.Q} is not Demazure")
    if match is None:
        return None
    block.sigma, block.nu = match.sigma, match.nu
    block.beta_hat = match.lowest_weight
    exp = key_expand(character(S))
    block.check("key_expand_agrees", exp.positive and exp.multiset() == [block.beta_hat],
                f"character expands as {exp.multiset()}")
    return block.beta_hat


def _check_block(block: Block, flag: tuple[int, ...]) -> None:
    n = block.n
    S = block.crystal
    ambient = S.ambient
    leaks = [(T, i) for T in S for i in S.indices
             if ambient.e(i, T) is not None and ambient.e(i, T) not in S]
    block.check("e_closed", not leaks, f"e_{leaks[0][1]} leaves the block at {leaks[0][0]}" if leaks else "")

    try:
        beta_hat = compute_beta_hat(block)
    except ValueError as exc:
        block.check("demazure_match", False, str(exc))
        return
    nu = tuple(p for p in block.nu) if block.nu is not None else None
    shape_q = block.Q.shape + (0,) * (n - len(block.Q.shape))
    if beta_hat is not None:
        block.check("beta_hat_sorts_to_shape", tuple(sorted(beta_hat, reverse=True)) == shape_q,
                    f"beta_hat {beta_hat}, shape {block.Q.shape}")

    K = left_key(block.Q)
    block.check("left_key_is_key", K.is_key() and K.shape == block.Q.shape, str(K))
    beta = K.content(n)
    block.beta = beta
    if beta_hat is not None:
        block.check("beta_hat_rearranges_beta", sorted(beta_hat) == sorted(beta), f"{beta_hat} vs {beta}")
        block.observations["beta_hat_equals_beta"] = beta_hat == beta

    # Omega: block -> W(beta(Q), flag), Knuth-equivalent images
    images = {}
    not_knuth = None
    for T in S:
        v = omega(T, block.Q)
        images[T] = v
        if not_knuth is None and v not in knuth_class(reading_word(T)):
            not_knuth = T
    W = enumerate_W(beta, flag)
    image_set = set(images.values())
    block.check("omega_injective", len(image_set) == len(S))
    block.check("omega_onto_W", image_set == set(W),
                f"{len(image_set - W)} images outside W, {len(W - image_set)} words of W missed")
    block.check("omega_knuth", not_knuth is None, str(not_knuth))

    # Psi = P o Omega: weight-preserving isomorphism onto the matched Demazure crystal
    if block.sigma is None:
        return
    D = demazure_generate(block.sigma, block.nu)
    tab = TableauCrystal(n)
    psi_map = {T: insertion_tableau(v) for T, v in images.items()}
    block.check("psi_bijective", set(psi_map.values()) == set(D.elements) and len(set(psi_map.values())) == len(S))
    block.check("psi_weight", all(weight(T) == tab.weight(P) for T, P in psi_map.items()))
    bad = None
    for T, P in psi_map.items():
        for i in S.indices:
            for op_s, op_d in ((S.f, D.f), (S.e, D.e)):
                T2, P2 = op_s(i, T), op_d(i, P)
                if (T2 is None) != (P2 is None) or (T2 is not None and psi_map[T2] != P2):
                    bad = bad or f"operator {i} at {T}"
    block.check("psi_intertwines", bad is None, bad or "")
    if block.witness is not None:
        block.check("witness_is_highest", psi_map[block.witness] == highest_weight_tableau(block.nu))


def slice_intersection_identity(shape: SkewShape, flag) -> dict:
    """Compare Re(shape, flag, h) with letterwise-bounded words in Re(shape, n, h)."""
    flag = check_flag(flag)
    n = len(flag)
    flagged = set(enumerate_rpps(shape, flag))
    result = {}
    for name, orient in (("standard_orientation", False), ("mirrored_orientation", True)):
        witness = None
        for T in enumerate_rpps_m(shape, n):
            h, w = height(T), reading_word(T)
            bounds = [flag[r - 1] for r in h]
            if orient:
                bounds.reverse()
            in_product = all(x <= b for x, b in zip(w, bounds))
            if in_product != (T in flagged):
                witness = str(T)
                break
        result[name] = {"holds": witness is None, "witness": witness}
    return result


@dataclass
class TabReport:
    slice_is_tab: bool
    slice_character_is_schur: bool
    schur_is_top_degree: bool

    @property
    def ok(self) -> bool:
        return self.slice_is_tab and self.slice_character_is_schur and self.schur_is_top_degree

    def to_json(self):
        return {"ok": self.ok, "slice_is_tab": self.slice_is_tab,
                "slice_character_is_schur": self.slice_character_is_schur,
                "schur_is_top_degree": self.schur_is_top_degree}


def verify_tab_special_case(shape: SkewShape, flag) -> TabReport:
    flag = check_flag(flag)
    n = len(flag)
    delta = shape.difference() + (0,) * (n - shape.rows)
    h = b_word(delta)
    rpps = enumerate_rpps(shape, flag)
    slice_ = CrystalSet(tuple(T for T in rpps if height(T) == h), RppCrystal(n), "partial")
    tab = {T for T in rpps if T.is_strict()}
    schur = flagged_schur(shape, flag)
    return TabReport(
        set(slice_.elements) == tab,
        (character(slice_) if slice_.elements else Polynomial.zero(n)) == schur,
        # degree |shape| rather than the top degree: the two differ when no flagged SSYT exists
        grothendieck_poly(shape, flag).homogeneous_component(shape.size) == schur,
    )


@dataclass
class DecompositionReport:
    shape: SkewShape
    flag: tuple[int, ...]
    blocks: list[Block] = field(default_factory=list)
    verdict: str = VERIFIED
    checks: dict[str, bool] = field(default_factory=dict)
    witness: str | None = None
    grothendieck: Polynomial | None = None
    key_sum: list[tuple[int, ...]] = field(default_factory=list)
    slice_unions: list[dict] = field(default_factory=list)
    intersection_identity: dict = field(default_factory=dict)
    tab: TabReport | None = None

    @property
    def ok(self) -> bool:
        return self.verdict == VERIFIED

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "flag": list(self.flag),
            "verdict": self.verdict,
            "witness": self.witness,
            "checks": dict(sorted(self.checks.items())),
            "grothendieck": self.grothendieck.to_json() if self.grothendieck is not None else None,
            "grothendieck_text": str(self.grothendieck) if self.grothendieck is not None else None,
            "key_expansion": [list(a) for a in self.key_sum],
            "blocks": [b.to_json() for b in self.blocks],
            "slice_unions": self.slice_unions,
            "intersection_identity": self.intersection_identity,
            "tab_special_case": self.tab.to_json() if self.tab else None,
        }


def verify_main_theorem(shape: SkewShape, flag, limits: DeskLimits | None = None) -> DecompositionReport:
    flag = check_flag(flag)
    n = len(flag)
    report = DecompositionReport(shape, flag)
    limits = limits or DeskLimits()
    if not limits.admits(shape, flag):
        report.verdict = SKIPPED
        return report

    blocks = partition_by_Q(shape, flag)
    report.blocks = blocks
    for b in blocks:
        _check_block(b, flag)

    g = grothendieck_poly(shape, flag)
    report.grothendieck = g
    total = sum(len(b.members) for b in blocks)
    report.checks["blocks_cover"] = total == len(enumerate_rpps(shape, flag))
    report.checks["blocks"] = all(b.ok for b in blocks)
    if all(b.beta_hat is not None for b in blocks):
        report.key_sum = sorted(b.beta_hat for b in blocks)
        keysum = Polynomial.zero(n)
        for a in report.key_sum:
            keysum = keysum + key_polynomial(a)
        report.checks["key_sum"] = keysum == g
    else:
        report.checks["key_sum"] = False

    rpps = enumerate_rpps(shape, flag)
    slices_ok = True
    for h, S in height_slices(shape, n, rpps).items():
        u = verify_demazure_union(S)
        slices_ok &= u.ok
        report.slice_unions.append({"height": list(h), **u.to_json()})
    report.checks["slice_union"] = slices_ok
    report.intersection_identity = slice_intersection_identity(shape, flag)
    report.tab = verify_tab_special_case(shape, flag)
    report.checks["tab_special_case"] = report.tab.ok

    failed = [k for k, v in report.checks.items() if not v]
    if failed:
        report.verdict = FALSIFIED
        bad_blocks = [b for b in blocks if not b.ok]
        if bad_blocks:
            report.witness = f"Q={bad_blocks[0].Q}: {bad_blocks[0].failures[0]}"
        else:
            report.witness = failed[0]
    return report
