#!/usr/bin/env python3
"""Walk-through: the findings document.

The workbench adjudicates five ambiguous items by exhaustive exact checks
plus free-word expansion, and emits the verdicts (with failure witnesses) as
a deterministic machine-readable document.  This script prints a readable
summary; `opalg findings` emits the JSON.
"""

from opalg.findings import open_question_findings

doc = open_question_findings()
print(f"findings produced by {doc['tool']}")
print()

for name, item in doc["items"].items():
    print(f"== {name} ==")
    print(f"  question: {item['question']}")
    for key in ("instances", "tensor-comparison", "gl2-tensor-checks"):
        if key in item:
            for label, verdict in item[key].items():
                if isinstance(verdict, dict) and "passed" in verdict:
                    state = "PASS" if verdict["passed"] else "FAIL"
                    witness = verdict.get("witness")
                    where = f" at {tuple(witness['indices'])}" if witness else ""
                    print(f"    {label}: {state}{where}")
                elif isinstance(verdict, dict):
                    summary = {k: v["passed"] for k, v in verdict.items() if isinstance(v, dict) and "passed" in v}
                    print(f"    {label}: {summary}")
    print(f"  conclusion: {item['conclusion']}")
    print()
