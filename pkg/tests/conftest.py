from collections import defaultdict


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    results = defaultdict(list)
    for outcome in ("passed", "failed", "xfailed", "xpassed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" in props and rep.when in ("call", "setup"):
                results[props["criterion"]].append((outcome, props.get("detail", "")))
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(results, key=int):
        parts = results[crit]
        ok = all(outcome == "passed" for outcome, _ in parts)
        detail = " | ".join(d for _, d in parts if d)
        known = " (known failure, see xfail reason)" if any(o == "xfailed" for o, _ in parts) else ""
        terminalreporter.write_line(f"criterion {crit}: {'PASS' if ok else 'FAIL'}{known} - {detail}")
