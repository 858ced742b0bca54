#!/usr/bin/env python3
"""Writes the seed case base (data/seed_kb.jsonl).

Each record is an expert judgement of one behaviour in one decision context.
Features are derived from the raw fields when the case base is loaded.
"""
import json
import sys
from pathlib import Path

MANIFEST = [
    "epsilon_m/3", "min(d,4)/4", "min(f,6)/6",
    "reminder_state=issued", "reminder_state=snoozed", "reminder_state=ignored", "reminder_state=acknowledged",
    "pending=none", "pending=SNOOZE", "pending=ACKNOWLEDGE",
    "acknowledged_without_taking",
    "behaviour=remind", "behaviour=snooze", "behaviour=follow_up", "behaviour=record", "behaviour=report",
    "behaviour=acknowledge_wait",
    "autonomy_utility", "wellbeing_utility",
]

W, AU = ("wellbeing",), ("autonomy",)
WAU = ("wellbeing", "autonomy")

# (epsilon_m, d) pairs covered by the experts.
CASES = [(1, 0), (2, 0), (3, 0), (1, 2), (2, 2), (3, 2)]

# decision point -> (reminder_state, pending instruction, acknowledged_without_taking, f values)
POINTS = {
    "start": ("issued", None, False, [0]),
    "snooze_instr": ("snoozed", "SNOOZE", False, [0, 2, 4, 6]),
    "window": ("snoozed", "SNOOZE", False, [0, 2, 4, 6]),
    "followup_due": ("snoozed", None, False, [0, 2, 4, 6]),
    "ack_instr": ("acknowledged", "ACKNOWLEDGE", False, [1, 3, 5]),
    "inspect": ("acknowledged", "ACKNOWLEDGE", False, [1, 3, 5]),
    "breach": ("acknowledged", None, True, [1, 3, 5]),
}


def candidates(point, f):
    if point == "start":
        return [("remind", None)]
    if point == "snooze_instr":
        return [("snooze", "SNOOZE"), ("follow_up", None), ("report", None)]
    if point == "window":
        return [("snooze", "SNOOZE")]
    if point == "followup_due":
        return [("follow_up", None)] if f < 3 else [("follow_up", None), ("record", None), ("report", None)]
    if point == "ack_instr":
        return [("acknowledge_wait", "ACKNOWLEDGE"), ("report", None)]
    if point == "inspect":
        return [("acknowledge_wait", "ACKNOWLEDGE")]
    return [("follow_up", None), ("record", None), ("report", None)]


def expert(point, eps, d, f, kind):
    """Returns (acceptability, intention)."""
    if point == "start":
        return 1, W
    if point in ("snooze_instr", "window"):
        if kind != "snooze":
            return 0, AU
        if eps == 1 or (eps == 2 and d == 0 and f < 2):
            return 1, AU
        return 0, W
    if point in ("ack_instr", "inspect"):
        return (1, AU) if kind == "acknowledge_wait" else (0, AU)
    if point == "followup_due":
        return {"follow_up": (1, W), "record": (0, W), "report": (0, AU)}[kind]
    late = f >= 3
    if eps == 3 or (eps == 2 and d >= 2):
        table = {"follow_up": (0, W), "record": (0, W), "report": (1, W)}
    elif eps == 2:
        table = ({"follow_up": (0, WAU), "record": (0, AU), "report": (1, W)} if late
                 else {"follow_up": (0, W), "record": (0, AU), "report": (0, AU)})
    elif d >= 2:
        table = {"follow_up": (0, W), "record": (1, AU), "report": (0, AU)}
    else:
        table = ({"follow_up": (0, W), "record": (1, AU), "report": (0, AU)} if late
                 else {"follow_up": (1, AU), "record": (0, AU), "report": (0, AU)})
    return table[kind]


def records():
    for eps, d in CASES:
        for point, (state, pending, awt, fs) in POINTS.items():
            for f in fs:
                for kind, obeys in candidates(point, f):
                    acc, intention = expert(point, eps, d, f, kind)
                    yield {
                        "id": f"e{eps}d{d}-{point}-f{f}-{kind}",
                        "epsilon_m": eps,
                        "d": d,
                        "f": f,
                        "reminder_state": state,
                        "pending": pending,
                        "acknowledged_without_taking": awt,
                        "behaviour": kind,
                        "obeys": obeys,
                        "acceptability": float(acc),
                        "intention": list(intention),
                    }


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "seed_kb.jsonl"
    with out.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps({"format": "psrb-case-base", "version": 1, "manifest": MANIFEST},
                            separators=(",", ":")) + "\n")
        n = 0
        for rec in records():
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
            n += 1
    print(f"wrote {n} cases to {out}")


if __name__ == "__main__":
    main()
