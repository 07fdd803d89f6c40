"""JSON/text reports for the command line.

Reports are plain dicts with a fixed key order and integer/string/bool/null
leaves only, so serializing the same input twice gives identical bytes.
"""

from __future__ import annotations

import hashlib
import json
from importlib import resources

from . import __version__, bits
from .automaton import validate
from .csfa import classify, format_chain, predict_decomposition, verify
from .errors import TheoremViolation
from .holonomy import components, skeleton_space
from .monoid import DEFAULT_MONOID_CAP, enumerate_monoid, format_word, is_cyclic_group

SECTIONS = ("validation", "classification", "monoid", "skeleton",
            "components", "prediction", "verification")


def digest(data):
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _states(collection):
    return sorted(collection)


def validation_section(aut, report):
    violation = None
    if report.sfa_violation is not None:
        violation = {"states": list(report.sfa_violation.states),
                     "word": format_word(report.sfa_violation.word)}
    return {
        "states": aut.n,
        "alphabet": list(aut.alphabet),
        "initial": aut.initial,
        "finals": _states(aut.finals),
        "accessible": _states(report.accessible),
        "coaccessible": _states(report.coaccessible),
        "trim": report.trim,
        "is_sfa": report.is_sfa,
        "reasons": list(report.reasons),
        "sfa_violation": violation,
        "bpis": _states(report.bpis),
        "indegree": list(report.indegree),
    }


def classification_section(cls):
    return {
        "is_sfa": cls.is_sfa,
        "is_circular": cls.is_circular,
        "circular_letter": cls.circular_letter,
        "bpi_set": _states(cls.bpi_set),
        "bpi_count": cls.bpi_count,
        "ordering": list(cls.ordering) if cls.ordering is not None else None,
        "m_index": cls.m_index,
        "r": cls.r,
    }


def monoid_section(monoid):
    perms = monoid.permutations()
    non_perm = [f.rank for f in monoid.elements if not f.is_permutation]
    cyclic_order = None
    if len(perms) == monoid.size:
        cyc = is_cyclic_group(perms)
        cyclic_order = cyc[0] if cyc is not None else None
    return {
        "size": monoid.size,
        "permutation_count": len(perms),
        "max_nonpermutation_rank": max(non_perm) if non_perm else None,
        "cyclic_group_order": cyclic_order,
    }


def skeleton_section(skel):
    counts = {}
    for m in skel.members:
        k = bits.popcount(m)
        counts[k] = counts.get(k, 0) + 1
    return {
        "size": len(skel.members),
        "by_cardinality": [{"cardinality": k, "count": counts[k]}
                           for k in sorted(counts, reverse=True)],
        "height": skel.height(skel.full),
        "classes": [
            {
                "height": skel.heights[c],
                "cardinality": skel.cardinality(c),
                "representative": bits.members(skel.class_rep(c)),
                "members": [bits.members(m) for m in members],
            }
            for c, members in enumerate(skel.classes)
        ],
    }


def components_section(comps):
    out = []
    for comp in comps:
        cyclic_order = comp.cyclic_order
        out.append({
            "level": comp.level,
            "class_count": len(comp.class_reps),
            "degree": comp.degree,
            "group_order": comp.order,
            "cyclic": cyclic_order is not None,
            "cyclic_order": cyclic_order,
            "generator_word": comp.generator_word,
            "closed": comp.closed,
            "factors": [
                {
                    "representative": bits.members(g.tile),
                    "paving": [bits.members(r) for r in g.paving],
                    "degree": g.degree,
                    "group_order": g.order,
                    "cyclic_order": g.cyclic_order,
                    "generator_word": g.generator_word,
                }
                for g in comp.factors
            ],
        })
    return out


def prediction_section(pred):
    if pred is None:
        return None
    return {
        "applicable": pred.applicable,
        "source": pred.source,
        "chain": [{"degree": d, "cyclic_order": o} for d, o in pred.chain],
        "note": pred.note,
    }


def verification_section(vrep):
    return {
        "passed": vrep.passed,
        "checks": [{"id": c.id, "status": c.status, "detail": c.detail,
                    "witness": c.witness} for c in vrep.checks],
    }


def build_report(command, aut, source_path, data, cap=DEFAULT_MONOID_CAP):
    """Assemble the report for ``analyze``, ``decompose`` or ``verify``.

    Returns ``(report_dict, extras)`` where ``extras`` holds the computed
    objects (monoid, skeleton, ...) for DOT export and exit-code decisions.
    """
    report = {"tool_version": __version__, "command": command,
              "input": {"path": source_path, "digest": digest(data)}}
    for key in SECTIONS:
        report[key] = None
    vreport = validate(aut)
    cls = classify(aut)
    report["validation"] = validation_section(aut, vreport)
    report["classification"] = classification_section(cls)

    extras = {}
    if command == "verify":
        vrep = verify(aut, cap=cap)
        monoid, skel, comps = vrep.monoid, vrep.skeleton, vrep.components
        report["prediction"] = prediction_section(vrep.prediction)
        report["verification"] = verification_section(vrep)
        extras["verification"] = vrep
    else:
        monoid = enumerate_monoid(aut, cap)
        skel = skeleton_space(monoid)
        comps = components(skel, monoid) if command == "decompose" else None
    report["monoid"] = monoid_section(monoid)
    if command in ("decompose", "verify"):
        report["skeleton"] = skeleton_section(skel)
        report["components"] = components_section(comps)
    if command == "decompose" and cls.is_sfa:
        try:
            report["prediction"] = prediction_section(predict_decomposition(cls, aut.n))
        except TheoremViolation:
            pass
    extras.update(monoid=monoid, skeleton=skel, components=comps)
    return report, extras


def dumps(report):
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def load_schema():
    text = resources.files("csfa_holonomy").joinpath("report.schema.json").read_text("utf-8")
    return json.loads(text)


def validate_report(obj):
    """Raise ``jsonschema.ValidationError`` unless ``obj`` matches the schema."""
    import jsonschema

    jsonschema.validate(obj, load_schema())


# -- text rendering -----------------------------------------------------------

def _yn(flag):
    return "yes" if flag else "no"


def _set(states):
    return "{" + ",".join(str(q) for q in states) + "}"


def render_text(report):
    lines = [f"tool: csfa-holonomy {report['tool_version']}",
             f"input: {report['input']['path']} ({report['input']['digest']})"]
    v = report["validation"]
    lines += [
        f"states: {v['states']}",
        f"alphabet: {' '.join(v['alphabet'])}",
        f"initial: {v['initial']}",
        f"finals: {_set(v['finals'])}",
        f"trim: {_yn(v['trim'])}",
        f"sfa: {_yn(v['is_sfa'])}",
    ]
    for reason in v["reasons"]:
        lines.append(f"  not an SFA: {reason}")
    if v["sfa_violation"] is not None:
        cyc = v["sfa_violation"]
        lines.append(f"  cycle avoiding the initial state: "
                     f"{' -> '.join(map(str, cyc['states']))} on {cyc['word']}")
    lines += [f"bpis: {_set(v['bpis'])}",
              f"indegree: {' '.join(map(str, v['indegree']))}"]

    c = report["classification"]
    lines.append(f"circular: {_yn(c['is_circular'])}")
    if c["circular_letter"] is not None:
        lines.append(f"circular letter: {c['circular_letter']}")
    lines.append(f"bpi count: {c['bpi_count']}")
    if c["m_index"] is not None:
        lines.append(f"m index: {c['m_index']}")
    if c["r"] is not None:
        lines.append(f"r: {c['r']}")

    m = report["monoid"]
    lines += [f"monoid size: {m['size']}",
              f"permutations: {m['permutation_count']}"]
    if m["max_nonpermutation_rank"] is not None:
        lines.append(f"max non-permutation rank: {m['max_nonpermutation_rank']}")
    if m["cyclic_group_order"] is not None:
        lines.append(f"cyclic group order: {m['cyclic_group_order']}")

    s = report["skeleton"]
    if s is not None:
        lines.append(f"skeleton size: {s['size']}")
        for entry in s["by_cardinality"]:
            lines.append(f"skeleton J{entry['cardinality']}: {entry['count']}")
        lines.append(f"height: {s['height']}")
    comps = report["components"]
    if comps is not None:
        for comp in comps:
            group = f"C{comp['cyclic_order']}" if comp["cyclic"] else "non-cyclic"
            gen = f", generator {comp['generator_word']}" if comp["generator_word"] else ""
            lines.append(
                f"level {comp['level']}: degree {comp['degree']}, group order "
                f"{comp['group_order']}, {group}, classes {comp['class_count']}{gen}")
        lines.append("chain: " + format_chain(
            [(comp["degree"], comp["cyclic_order"]) for comp in comps]))
    p = report["prediction"]
    if p is not None:
        if p["applicable"]:
            lines.append(f"prediction: {p['source']} " + format_chain(
                [(e["degree"], e["cyclic_order"]) for e in p["chain"]]))
        else:
            lines.append(f"prediction: none ({p['note']})")
    ver = report["verification"]
    if ver is not None:
        for chk in ver["checks"]:
            wit = f" [{chk['witness']}]" if chk["witness"] else ""
            lines.append(f"check {chk['id']}: {chk['status']} - {chk['detail']}{wit}")
        lines.append(f"verdict: {'pass' if ver['passed'] else 'fail'}")
    return "\n".join(lines) + "\n"
