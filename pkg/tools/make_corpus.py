"""Regenerate corpus/ from the table below. Run from the repository root."""
import json
from pathlib import Path

S2 = {"genus": 0}
T2 = {"genus": 1}


def seifert(base, b, order=None):
    out = {"type": "seifert", "base": base, "b": b}
    if order is not None:
        out["pi1_order"] = order
    return out


def geo(tag, order=None):
    out = {"type": "geometric", "geometry": tag}
    if order is not None:
        out["pi1_order"] = order
    return out


RP3 = geo("S3", 2)
S2S1 = seifert(S2, 0)
T3 = seifert(T2, 0)
LENS5 = geo("S3", 5)
HYP = {"type": "hyperbolic"}
SOL = {"type": "torus_bundle", "monodromy": [[2, 1], [1, 1]]}
NIL = seifert(T2, -1)
PSL = seifert({"genus": 0, "cones": [[2, 1], [3, 1], [7, 1]]}, -1)
H2E = seifert({"genus": 2}, 0)
SWAP = [[0, 1], [1, 0]]
HYP_BASE = {"genus": 0, "cones": [[2, 1], [3, 1]], "boundary": 1}


def jsj(vertices, edges):
    return {"type": "jsj", "vertices": vertices, "edges": edges}


def sv(vid, base, fibers):
    return {"id": vid, "kind": "seifert", "base": base, "fibers": fibers}


def edge(a, b, gluing):
    return {"a": a, "b": b, "gluing": gluing}


JSJ_HYP = jsj([{"id": "H", "kind": "hyperbolic", "cusps": 2}],
              [edge(["H", 0], ["H", 1], [[2, 1], [1, 1]])])
JSJ_SEIFERT = jsj([sv("A", HYP_BASE, [[1, 0]]), sv("B", HYP_BASE, [[1, 0]])],
                  [edge(["A", 0], ["B", 0], SWAP)])
JSJ_MIXED = jsj([sv("A", {"genus": 0, "cones": [[2, 1]], "boundary": 2}, [[1, 0], [1, 0]]),
                 {"id": "H", "kind": "hyperbolic", "cusps": 2}],
                [edge(["A", 0], ["H", 0], [[1, 0], [0, 1]]), edge(["A", 1], ["H", 1], SWAP)])
JSJ_K = jsj([{"id": "K", "kind": "k"}, {"id": "H", "kind": "hyperbolic", "cusps": 1}],
            [edge(["K", 0], ["H", 0], [[1, 0], [0, 1]])])
JSJ_K_SEIFERT = jsj([{"id": "K", "kind": "k"}, sv("A", HYP_BASE, [[1, 1]])],
                    [edge(["K", 0], ["A", 0], [[1, 0], [0, 1]])])
JSJ_MOEBIUS = jsj([sv("M", {"genus": 1, "orientable": False, "boundary": 1}, [[1, 0]]),
                   {"id": "H", "kind": "hyperbolic", "cusps": 1}],
                  [edge(["M", 0], ["H", 0], [[1, 1], [0, 1]])])

VALID = {
    # name: (description, summands, gdvc, clause)
    "table1_spherical_base": ("Hopf fibration of S3", [seifert(S2, -1, 1)], 0, 1),
    "table1_bad_base": ("teardrop base S2(3), e != 0: lens space", [seifert({"genus": 0, "cones": [[3, 1]]}, -1, 2)], 0, 1),
    "table1_hyperbolic_base": ("S2(2,3,7), b = -1: PSLtilde", [PSL], 3, 4),
    "table1_euclidean_e3": ("3-torus", [T3], 4, 3),
    "table1_euclidean_nil": ("Heisenberg nilmanifold", [NIL], 3, 4),
    "table1_hyperbolic": ("closed hyperbolic", [HYP], 3, 4),
    "s3": ("the 3-sphere itself", [geo("S3", 1)], 0, 1),
    "s2xs1": ("S2 x S1", [S2S1], 0, 1),
    "lens": ("a lens space with fundamental group of order 5", [LENS5], 0, 1),
    "rp3_rp3": ("RP3 # RP3, infinite dihedral group", [RP3, RP3], 0, 1),
    "rp3_x3": ("RP3 # RP3 # RP3", [RP3, RP3, RP3], 2, 2),
    "s2xs1_rp3": ("S2 x S1 # RP3", [S2S1, RP3], 2, 2),
    "rp3_lens": ("RP3 # L(5,1)", [RP3, LENS5], 2, 2),
    "s2xs1_s2xs1": ("S2 x S1 # S2 x S1, free group of rank 2", [S2S1, S2S1], 2, 2),
    "t3": ("3-torus", [T3], 4, 3),
    "t3_rp3": ("3-torus # RP3", [T3, RP3], 4, 3),
    "t3_hyperbolic": ("3-torus # hyperbolic", [T3, HYP], 4, 3),
    "flat_torus_bundle": ("torus bundle with order-6 monodromy", [{"type": "torus_bundle", "monodromy": [[1, -1], [1, 0]]}], 4, 3),
    "double_of_k_flat": ("two copies of K glued by the identity", [{"type": "double_of_k", "gluing": [[1, 0], [0, 1]]}], 4, 3),
    "declared_e3_sum": ("declared flat summand in a sum", [geo("E3"), S2S1, geo("Sol")], 4, 3),
    "sol": ("Sol torus bundle", [SOL], 3, 4),
    "nil_torus_bundle": ("parabolic torus bundle", [{"type": "torus_bundle", "monodromy": [[1, 1], [0, 1]]}], 3, 4),
    "double_of_k_sol": ("double of K, trace-6 monodromy", [{"type": "double_of_k", "gluing": [[1, 1], [1, 2]]}], 3, 4),
    "h2xe": ("genus-2 surface times a circle", [H2E], 3, 4),
    "hyperbolic_rp3": ("hyperbolic # RP3", [HYP, RP3], 3, 4),
    "psl_s2xs1": ("PSLtilde # S2 x S1", [PSL, S2S1], 3, 4),
    "jsj_hyperbolic_only": ("one hyperbolic piece glued to itself", [JSJ_HYP], 3, 4),
    "jsj_seifert_only": ("two Seifert pieces over D2(2,3), fibers crossed", [JSJ_SEIFERT], 3, 4),
    "jsj_mixed": ("Seifert piece and hyperbolic piece joined along two tori", [JSJ_MIXED], 3, 4),
    "jsj_k_hyperbolic": ("K attached to a hyperbolic piece", [JSJ_K], 3, 4),
    "jsj_k_seifert": ("K attached to a Seifert piece off the eigen-slopes", [JSJ_K_SEIFERT], 3, 4),
    "jsj_moebius_k": ("K presented over the Moebius band", [JSJ_MOEBIUS], 3, 4),
    "valid_jsj": ("two Seifert pieces with crossed fibers", [JSJ_SEIFERT], 3, 4),
}

INVALID = {
    # name: (description, document or raw text, exit code, rule)
    "bad_jsj": ("Seifert pieces whose fibers match", {"summands": [jsj(
        [sv("A", HYP_BASE, [[1, 0]]), sv("B", HYP_BASE, [[1, 0]])],
        [edge(["A", 0], ["B", 0], [[1, 0], [0, 1]])])]}, 2, "Prop 8.2(e)"),
    "double_k_as_jsj": ("two K pieces presented as a JSJ graph", {"summands": [jsj(
        [{"id": "K1", "kind": "k"}, {"id": "K2", "kind": "k"}],
        [edge(["K1", 0], ["K2", 0], [[1, 1], [0, 1]])])]}, 2, "Prop 7.3"),
    "k_eigen_match": ("K attached so the fibration extends", {"summands": [jsj(
        [{"id": "K", "kind": "k"}, sv("A", HYP_BASE, [[0, 1]])],
        [edge(["K", 0], ["A", 0], [[1, 0], [0, 1]])])]}, 2, "Prop 8.2(f)"),
    "t2xi_piece": ("T2 x I glued to itself", {"summands": [jsj(
        [sv("A", {"genus": 0, "boundary": 2}, [[1, 0], [1, 0]])],
        [edge(["A", 0], ["A", 1], [[2, 1], [1, 1]])])]}, 2, "Lemma 7.1"),
    "solid_torus_piece": ("D2(2) base is a solid torus", {"summands": [jsj(
        [sv("A", {"genus": 0, "cones": [[2, 1]], "boundary": 1}, [[1, 0]]),
         {"id": "H", "kind": "hyperbolic", "cusps": 1}],
        [edge(["A", 0], ["H", 0], [[1, 0], [0, 1]])])]}, 2, "Lemma 5.9"),
    "bad_monodromy": ("determinant -1 monodromy", {"summands": [
        {"type": "torus_bundle", "monodromy": [[0, 1], [1, 0]]}]}, 1, None),
    "unmatched_socket": ("socket left open", {"summands": [jsj(
        [sv("A", HYP_BASE, [[1, 0]]), {"id": "H", "kind": "hyperbolic", "cusps": 2}],
        [edge(["A", 0], ["H", 0], [[1, 0], [0, 1]])])]}, 1, None),
    "float_entry": ("non-integer matrix entry", '{"expected": {"exit": 1}, "summands": '
                    '[{"type": "torus_bundle", "monodromy": [[1.5, 1], [0, 1]]}]}\n', 1, None),
    "spherical_missing_order": ("S3-geometry Seifert summand without pi1_order", {"summands": [seifert(S2, -1)]}, 2, "pi1_order"),
}


def write(path, doc):
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def main():
    root = Path("corpus")
    for sub in ("valid", "invalid", "malformed"):
        (root / sub).mkdir(parents=True, exist_ok=True)
        for old in (root / sub).glob("*.json"):
            old.unlink()
    for name, (text, summands, value, clause) in VALID.items():
        write(root / "valid" / f"{name}.json", {
            "name": name, "description": text, "summands": summands,
            "expected": {"gdvc": value, "clause": str(clause)},
        })
    for name, (text, doc, code, rule) in INVALID.items():
        path = root / "invalid" / f"{name}.json"
        if isinstance(doc, str):
            path.write_text(doc)
            continue
        expected = {"exit": code}
        if rule:
            expected["rule"] = rule
        write(path, {"name": name, "description": text, **doc, "expected": expected})
    # no expectation block can survive a file that is not JSON at all
    (root / "malformed" / "garbage.json").write_text("this is { not json\n")


if __name__ == "__main__":
    main()
