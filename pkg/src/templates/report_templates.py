"""Text reports printed by dlogctl."""
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple


class ReportTemplates:
    @staticmethod
    def selftest_line(name: str, status: str, detail: str = "") -> str:
        """One selftest item: ``PASS``, ``FAIL`` or ``KNOWN``."""
        line = f"[{status:<5}] {name}"
        if detail:
            line += f" - {detail}"
        return line

    @staticmethod
    def selftest_summary(statuses: Sequence[str]) -> dict:
        counts = {status: statuses.count(status) for status in ("PASS", "FAIL", "KNOWN")}
        ok = counts["FAIL"] == 0
        return {
            'title': f"selftest {'passed' if ok else 'FAILED'}",
            'body': (
                f"{counts['PASS']} passed, {counts['FAIL']} failed, "
                f"{counts['KNOWN']} known discrepancies (see KNOWN_DISCREPANCIES.md)"
            ),
        }

    @staticmethod
    def sweep_summary(records: Iterable) -> dict:
        """Mean elapsed and success count per (bits, multiplier, algorithm) cell."""
        cells: Dict[Tuple[int, Fraction, str], List] = defaultdict(list)
        for record in records:
            cells[(record.bits, record.multiplier, record.algorithm)].append(record)

        lines = [f"{'bits':>5} {'mult':>6} {'algorithm':<13} {'ok':>7} {'mean ms':>12}"]
        failures = 0
        for (bits, multiplier, algorithm), group in sorted(cells.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2])):
            ok = sum(1 for r in group if r.success)
            failures += len(group) - ok
            mean = sum(r.elapsed_ms for r in group) / len(group)
            lines.append(
                f"{bits:>5} {float(multiplier):>6.3g} {algorithm:<13} {ok:>3}/{len(group):<3} {mean:>12.3f}"
            )
        return {
            'title': f"sweep: {len(cells)} cells, {failures} failed trials",
            'body': "\n".join(lines),
        }

    @staticmethod
    def empirical_report(u: int, v: int, hits: int, trials: int, bound: Fraction) -> str:
        frequency = hits / trials
        sigma = (float(bound) * (1 - float(bound)) / trials) ** 0.5
        return (
            f"u={u} v={v}: empirical {hits}/{trials} = {frequency:.4f}, "
            f"bound {float(bound):.6f}, margin 3 sigma = {3 * sigma:.4f}"
        )

    @staticmethod
    def log_counts_report(counts: Dict[str, int]) -> str:
        return "\n".join(f"{name}: {value}" for name, value in counts.items())
