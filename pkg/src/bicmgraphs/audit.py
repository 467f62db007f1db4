"""Exhaustive theorem audit over all small connected graphs.

For every connected isomorphism class the harness replays each claimed
equivalence against the homological ground truth and records violations;
a correct implementation (and a correct theorem) produces none.  Reports are
fully deterministic: the scan order may be shuffled by a seed, but results
are keyed and re-sorted before assembly.

Vertex counts up to 7 get the complete check list.  At 8 vertices (behind
the CLI --big flag) only quick-reject survivors are certified and classified,
which is what keeps the run tractable.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field

from . import separation
from .bicm import certify_bicm, quick_reject
from .classify import (recognize_bipartite_bicm, recognize_chordal_bicm,
                       reduction_ideal_check)
from .enumeration import connected_graph_classes, tree_classes
from .errors import ConsistencyError, SizeGuardError
from .generic import generic_graph
from .graphs import Graph, are_isomorphic, is_bipartite, is_chordal
from .ideals import alexander_dual, edge_ideal
from .resolutions import FieldSpec, has_linear_resolution, is_cohen_macaulay

AUDIT_FREE_MAX = 6
AUDIT_BIG_MAX = 8
FULL_CHECK_MAX = 7
SEPARATION_BRUTE_MAX = 6


@dataclass
class AuditViolation:
    check: str
    n: int
    edges: list
    detail: str


@dataclass
class AuditRow:
    n: int
    scanned: int = 0
    survivors: int = 0
    bicm: int = 0
    bipartite_bicm: int = 0
    chordal_bicm: int = 0
    inseparable_bicm: int = 0


@dataclass
class AuditReport:
    n_max: int
    characteristics: tuple[int, ...]
    rows: list[AuditRow] = field(default_factory=list)
    bicm_classes: dict[int, list[list[list[int]]]] = field(default_factory=dict)
    violations: list[AuditViolation] = field(default_factory=list)
    char_disagreements: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "characteristics": list(self.characteristics),
            "rows": [asdict(r) for r in self.rows],
            "bicm_classes": {str(n): cls for n, cls in sorted(self.bicm_classes.items())},
            "violations": [asdict(v) for v in self.violations],
            "char_disagreements": self.char_disagreements,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    def pretty(self) -> str:
        lines = ["theorem audit"
                 f" (n <= {self.n_max}, characteristics {list(self.characteristics)})"]
        head = f"{'n':>3} {'scanned':>8} {'survivors':>10} {'bi-CM':>6} {'bipartite':>10} {'chordal':>8} {'insep.':>7}"
        lines.append(head)
        for r in self.rows:
            lines.append(f"{r.n:>3} {r.scanned:>8} {r.survivors:>10} {r.bicm:>6} "
                         f"{r.bipartite_bicm:>10} {r.chordal_bicm:>8} {r.inseparable_bicm:>7}")
        if self.char_disagreements:
            lines.append(f"characteristic disagreements: {len(self.char_disagreements)}")
        lines.append("violations: " + (str(len(self.violations)) if self.violations else "none"))
        for v in self.violations:
            lines.append(f"  [{v.check}] n={v.n} edges={v.edges}: {v.detail}")
        return "\n".join(lines)


def _audit_one(g: Graph, chars: tuple[int, ...], full: bool, brute_separation: bool):
    """Check every theorem instance on one connected graph.

    Returns (result dict, violations list); result drives the counters.
    """
    violations: list[tuple[str, str]] = []
    edges = g.edges()
    qr = quick_reject(g)
    result = {"survivor": qr is None, "bicm": False, "bipartite": False,
              "chordal": False, "inseparable_bicm": False, "char_disagreement": None}
    if qr is not None and not full:
        return result, violations

    ideal = edge_ideal(g)
    dual = alexander_dual(ideal)
    verdicts = {}
    for p in chars:
        k = FieldSpec(p)
        cm_i = is_cohen_macaulay(ideal, k)
        cm_j = is_cohen_macaulay(dual, k)
        definitional = cm_i and cm_j
        verdicts[p] = definitional
        cert = certify_bicm(g, k)
        if not cert.consistent:
            violations.append(("certificate_consistency", f"char {p}"))
        if cert.verdict != definitional:
            violations.append(("certificate_vs_definition",
                               f"char {p}: certificate {cert.verdict}, definition {definitional}"))
        for name, value in (
                ("edge_count_criterion", cert.cm_check and cert.edge_count_ok),
                ("cover_count_criterion", cert.cm_check and cert.cover_count_ok),
                ("betti_criterion", cert.betti_ok)):
            if bool(value) != definitional:
                violations.append((name, f"char {p}: criterion {bool(value)}, definition {definitional}"))
        if has_linear_resolution(dual, k) != cm_i:
            violations.append(("cm_duality", f"char {p}: dual linearity vs CM of the ideal"))
        if has_linear_resolution(ideal, k) != cm_j:
            violations.append(("cm_duality", f"char {p}: ideal linearity vs CM of the dual"))
        if qr is not None and definitional:
            violations.append(("quick_reject_unsound", f"char {p}: rejected '{qr}' but bi-CM"))
        if definitional:
            covers = {c.bit_count() for c in alexander_dual(ideal).gens}
            if len(covers) != 1:
                violations.append(("unmixedness", f"char {p}: bi-CM but mixed cover sizes {sorted(covers)}"))

    if len(set(verdicts.values())) > 1:
        result["char_disagreement"] = {"edges": [list(e) for e in edges],
                                       "verdicts": {str(p): v for p, v in verdicts.items()}}
    bicm = verdicts[chars[0]]
    result["bicm"] = bicm

    if is_bipartite(g) is not None:
        witness = recognize_bipartite_bicm(g)
        for p in chars:
            if (witness is not None) != verdicts[p]:
                violations.append(("bipartite_classification",
                                   f"char {p}: witness {witness is not None}, verdict {verdicts[p]}"))
        result["bipartite"] = bicm and witness is not None

    if is_chordal(g) is not None:
        witness = recognize_chordal_bicm(g)
        for p in chars:
            if (witness is not None) != verdicts[p]:
                violations.append(("chordal_classification",
                                   f"char {p}: witness {witness is not None}, verdict {verdicts[p]}"))
        if witness is not None and not reduction_ideal_check(g, witness):
            violations.append(("reduction_square_check", "witness accepted but reduction ideal is not the full square"))
        result["chordal"] = bicm and witness is not None

    inseparable = separation.is_inseparable(g)
    if brute_separation:
        if separation.separability_agreement(g) is False:
            violations.append(("separation_criterion",
                               "neighborhood criterion disagrees with candidate search"))

    if bicm:
        try:
            model = separation.inseparable_model(g)
        except ConsistencyError as exc:
            violations.append(("model_soundness", str(exc)))
            model = None
        if model is not None:
            if not separation.is_inseparable(model.graph):
                violations.append(("model_soundness", "model graph is separable"))
            if not certify_bicm(model.graph).verdict:
                violations.append(("model_soundness", "model graph is not bi-CM"))
            if not separation.dual_specialization_check(g):
                violations.append(("dual_specialization", "dual of the model does not specialize to the dual"))
        if inseparable:
            result["inseparable_bicm"] = True
            trees = separation.relation_trees(dual)
            if len(trees) != 1:
                violations.append(("unique_relation_tree",
                                   f"inseparable bi-CM graph has {len(trees)} relation trees"))
            matches = 0
            for tree, _ in trees:
                gen_graph, _ = generic_graph(tree)
                if are_isomorphic(g, gen_graph) is not None:
                    matches += 1
            if matches != 1:
                violations.append(("tree_model_iso",
                                   f"{matches} tree models isomorphic to the graph"))
    return result, violations


def run_audit(n_max: int, characteristics: tuple[int, ...] = (0, 2),
              big: bool = False, seed: int = 0, progress=None) -> AuditReport:
    """Scan all connected graph classes for 2 <= n <= n_max."""
    if n_max > AUDIT_BIG_MAX:
        raise SizeGuardError(f"audit limited to {AUDIT_BIG_MAX} vertices")
    if n_max > AUDIT_FREE_MAX and not big:
        raise SizeGuardError(
            f"audit beyond {AUDIT_FREE_MAX} vertices needs the --big flag")
    chars = tuple(dict.fromkeys(characteristics))
    report = AuditReport(n_max=n_max, characteristics=chars)
    for n in range(2, n_max + 1):
        classes = list(connected_graph_classes(n))
        row = AuditRow(n=n, scanned=len(classes))
        order = list(range(len(classes)))
        random.Random(seed).shuffle(order)
        full = n <= FULL_CHECK_MAX
        brute = n <= SEPARATION_BRUTE_MAX
        results: dict[int, tuple[dict, list]] = {}
        for idx in order:
            results[idx] = _audit_one(classes[idx], chars, full, brute)
            if progress is not None:
                progress(n, len(results), len(classes))
        bicm_list = []
        for idx in sorted(results):
            res, vio = results[idx]
            g = classes[idx]
            for check, detail in vio:
                report.violations.append(AuditViolation(
                    check=check, n=n, edges=[list(e) for e in g.edges()], detail=detail))
            row.survivors += res["survivor"]
            row.bicm += res["bicm"]
            row.bipartite_bicm += res["bipartite"]
            row.chordal_bicm += res["chordal"]
            row.inseparable_bicm += res["inseparable_bicm"]
            if res["bicm"]:
                bicm_list.append([list(e) for e in g.edges()])
            if res["char_disagreement"]:
                report.char_disagreements.append(res["char_disagreement"])
        report.bicm_classes[n] = bicm_list
        if n % 2 == 0:
            m = n // 2 + 1
            expected = len(tree_classes(m))
            if row.inseparable_bicm != expected:
                report.violations.append(AuditViolation(
                    check="tree_model_count", n=n, edges=[],
                    detail=f"{row.inseparable_bicm} inseparable bi-CM classes vs {expected} trees"))
        else:
            if row.inseparable_bicm != 0:
                report.violations.append(AuditViolation(
                    check="tree_model_count", n=n, edges=[],
                    detail=f"odd vertex count but {row.inseparable_bicm} inseparable bi-CM classes"))
        report.rows.append(row)
    return report
