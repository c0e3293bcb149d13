"""Named configurations, per-configuration reports, and the full check run."""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Iterator, Optional

from . import colouring, config, e6ext, fileformat, roots, symmetry
from .config import Configuration

NAMES = roots.SYSTEMS + ("E6-tilde", "E6-hat")


def build(name: str) -> Configuration:
    if name in roots.SYSTEMS:
        return roots.configuration(name)
    if name == "E6-tilde":
        return e6ext.build_a_tilde()
    if name == "E6-hat":
        return e6ext.build_a_hat()
    raise ValueError(f"unknown system {name!r}; choose from {', '.join(NAMES)}")


class _Clock:
    def __init__(self) -> None:
        self.timings: dict[str, float] = {}

    def run(self, stage: str, fn: Callable[[], Any]) -> Any:
        t = time.perf_counter()
        out = fn()
        self.timings[stage] = round(time.perf_counter() - t, 4)
        return out


def analyze(
    c: Configuration,
    cliques: Optional[int] = None,
    anticliques: Optional[int] = None,
    saturation: bool = False,
    colour: Optional[str] = None,
) -> dict:
    """Report document for ``c``; ``timings`` is the only nondeterministic field."""
    clock = _Clock()
    doc: dict[str, Any] = {"configuration": c.name, "rays": len(c), "d": c.d, "n": c.n}
    if cliques is not None:
        prof = clock.run("cliques", lambda: config.clique_profile(c.graph.adj, cliques))
        doc["clique_profile"] = {str(k): prof[k] for k in range(2, cliques + 1)}
    if anticliques is not None:
        prof = clock.run(
            "anticliques", lambda: config.clique_profile(c.graph.complement().adj, anticliques)
        )
        doc["anticlique_profile"] = {str(q): prof[q] for q in range(2, anticliques + 1)}
    if saturation:
        s = clock.run("saturation", lambda: config.analyze_saturation(c))
        doc["saturation"] = {
            "saturated": s.saturated,
            "witness": list(s.witness) if s.witness is not None else None,
            "ladder": {str(k): v for k, v in s.ladder.items()},
        }
    if colour is not None:
        res = clock.run("colouring", lambda: colouring.solve(c, colour))
        entry: dict[str, Any] = {"mode": colour, "status": res.status.value}
        if res.count is not None:
            entry["count"] = res.count
        if res.witness is not None:
            entry["red"] = sorted(res.witness.red)
        if res.witnesses is not None:
            entry["all_red"] = [sorted(w.red) for w in res.witnesses]
        doc["colouring"] = entry
    doc["timings"] = clock.timings
    return doc


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def line(self) -> str:
        s = f"{self.name} = {_fmt(self.expected)} {'PASS' if self.passed else 'FAIL'}"
        if not self.passed:
            s += f" (computed {_fmt(self.computed)})"
        return s


def _fmt(x: Any) -> str:
    if isinstance(x, (set, frozenset)):
        return "{" + ", ".join(_fmt(v) for v in sorted(x)) + "}"
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


E7_N = {2: 945, 3: 4095, 4: 4725, 5: 2835, 6: 945, 7: 135}
E7_M = {2: 1008, 3: 5376, 4: 10080, 5: 8064, 6: 2016, 7: 288, 8: 0}
E6_N = {2: 270, 3: 540, 4: 135, 5: 0, 6: 0}
ATILDE_N = {2: 4995, 3: 25920, 4: 32400, 5: 15552, 6: 2592}
AHAT_N = {2: 18423, 3: 104978, 4: 136620, 5: 66744, 6: 11124}
RAYS = {"F4": 24, "E6": 36, "E7": 63, "E8": 120, "H3": 15, "H4": 60, "G2": 6}


def claim_checks(reports: Optional[dict[str, dict]] = None) -> Iterator[Check]:
    """Every numerical claim, in order.  Reports for each configuration are
    collected into ``reports`` when given."""
    reports = {} if reports is None else reports

    systems = {s: roots.configuration(s) for s in roots.SYSTEMS}
    for s, c in systems.items():
        yield Check(f"{s}.roots", roots.ROOT_COUNTS[s], len(roots.generate(s)))
        yield Check(f"{s}.rays", RAYS[s], len(c))
        yield Check(f"{s}.d", roots.RANKS[s], c.d)

    for s in ("F4", "E7", "E8", "H4", "H3"):
        c = systems[s]
        rep = analyze(c, cliques=c.d, saturation=True, colour="count" if s == "H3" else "decide")
        reports[s] = rep
        yield Check(f"{s}.saturated", True, rep["saturation"]["saturated"])
        yield Check(f"{s}.colourable", s == "H3", rep["colouring"]["status"] == "SAT")
    yield Check("H3.goodcolourings", 243, reports["H3"]["colouring"]["count"])
    yield Check("H3.partition.count", 1, symmetry.count_clique_partitions(systems["H3"]))

    e7 = systems["E7"]
    rep = analyze(e7, cliques=7, anticliques=8)
    reports["E7"].update({k: rep[k] for k in ("clique_profile", "anticlique_profile")})
    for k, v in E7_N.items():
        yield Check(f"E7.n_{k}", v, rep["clique_profile"][str(k)])
    for q, v in E7_M.items():
        yield Check(f"E7.m_{q}", v, rep["anticlique_profile"][str(q)])
    blocks = symmetry.e7_block_indices(e7)
    covered = sorted(i for b in blocks for i in b)
    is_cliques = all(e7.graph.adjacent(i, j) for b in blocks for i in b for j in b if i < j)
    yield Check("E7.blocks.partition", True, covered == list(range(63)) and is_cliques)
    yield Check("E7.partition.count", 960, symmetry.count_clique_partitions(e7))
    depth = colouring.blockwise_sdr_search(e7, blocks)
    yield Check("E7.sdr.reaches_all_9_blocks", False, depth == 9)
    yield Check("E7.sdr.depth_at_least_7", True, depth >= 7)
    lab = symmetry.e7_labelled_rays()
    lam = [e7.index[lab[symmetry.E7Label("lambda", k)]] for k in range(7)]
    yield Check("E7.lambda.nonorthogonal", True,
                not any(e7.graph.adjacent(i, j) for i in lam for j in lam))

    e6 = systems["E6"]
    rep = analyze(e6, cliques=6, saturation=True)
    reports["E6"] = rep
    for k, v in E6_N.items():
        yield Check(f"E6.n_{k}", v, rep["clique_profile"][str(k)])
    yield Check("E6.degrees", {15}, {e6.graph.degree(i) for i in range(len(e6))})
    yield Check("E6.saturated", False, rep["saturation"]["saturated"])
    yield Check("E6.ladder", {"2": True, "3": True, "4": False},
                {k: rep["saturation"]["ladder"][k] for k in ("2", "3", "4")})
    yield Check("E6.orbits", True, e6ext.e6_configuration().ray_set() == e6.ray_set())
    classes = Counter(x.cls for x in e6ext.classify_4cliques(e6))
    for cls, v in (("Q1type", 27), ("Q2type", 54), ("Q3type", 54)):
        yield Check(f"E6.class.{cls}", v, classes[cls])

    tilde = e6ext.build_a_tilde()
    yield Check("Atilde.rays", 198, len(tilde))
    yield Check("Atilde.ext.rays", 162, len(e6ext.a_ext()))
    ptup = e6ext.p_tuples()
    yield Check("Atilde.P.count", 27, len(ptup))
    yield Check("Atilde.P.partition", True,
                frozenset().union(*ptup) == frozenset(e6ext.a_ext()) and sum(map(len, ptup)) == 162)
    o4 = frozenset(e6ext.orbits()[4])
    yield Check("Atilde.P.one_a_each", {1}, {len(p & o4) for p in ptup})
    rep = analyze(tilde, cliques=6, saturation=True, colour="count")
    reports["E6-tilde"] = rep
    for k, v in ATILDE_N.items():
        yield Check(f"Atilde.n_{k}", v, rep["clique_profile"][str(k)])
    yield Check("Atilde.saturated", True, rep["saturation"]["saturated"])
    yield Check("Atilde.goodcolourings", 1, rep["colouring"]["count"])
    yield Check("Atilde.red_is_O(lambda4)", True,
                {tilde.rays[i] for i in rep["colouring"].get("red", [])} == o4)

    ledger = e6ext.replay_uniqueness_proof(tilde)
    reports["E6-tilde"]["ledger"] = ledger.to_json()
    for step in ledger.steps:
        yield Check(f"Atilde.proof.{step.name}", step.expected, step.computed)

    hat = e6ext.build_a_hat()
    yield Check("Ahat.rays", 558, len(hat))
    rep = analyze(hat, cliques=6, saturation=True, colour="decide")
    reports["E6-hat"] = rep
    for k, v in AHAT_N.items():
        yield Check(f"Ahat.n_{k}", v, rep["clique_profile"][str(k)])
    yield Check("Ahat.saturated", True, rep["saturation"]["saturated"])
    yield Check("Ahat.colourable", False, rep["colouring"]["status"] == "SAT")
    cert = e6ext.replay_a_hat_noncolourability(ledger.red or None)
    yield Check("Ahat.Rhat", 54, len(cert.red))
    yield Check("Ahat.violating_6tuple", True, cert.red_in_witness != 1)
    reports["E6-hat"]["certificate"] = {
        "red_count": len(cert.red),
        "witness": [str(r) for r in cert.witness],
        "red_in_witness": cert.red_in_witness,
    }


def reproduce(out_dir: Path) -> list[Check]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    reports: dict[str, dict] = {}
    checks = list(claim_checks(reports))
    lines = [c.line() for c in checks]
    failed = [c for c in checks if not c.passed]
    lines.append(f"TOTAL {len(checks) - len(failed)}/{len(checks)} PASS")
    (out_dir / "summary.txt").write_text("\n".join(lines) + "\n")
    for name, rep in reports.items():
        (out_dir / f"{name}.report.json").write_text(json.dumps(rep, indent=2, sort_keys=True) + "\n")
    for name in NAMES:
        fileformat.save(build(name), out_dir / f"{name}.json")
    return checks
