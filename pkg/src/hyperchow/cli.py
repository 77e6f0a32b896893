"""Command-line frontend.

Exit status: 0 on success, 1 when a mathematical check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass

from . import chowcore as cc
from . import verifykit as vk

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    command: str
    family: str = "H"
    g: int | None = None
    n: int = 1
    g_min: int = 2
    g_max: int = 6
    format: str = "text"
    output: str | None = None

    def validate(self) -> "CliConfig":
        if self.command in ("present", "picard", "thm12"):
            if self.g is None or self.g < 2:
                raise UsageError("--g must be an integer >= 2")
        if self.command in ("present", "picard"):
            if not 1 <= self.n <= 2 * self.g + 2:
                raise UsageError(f"--n must lie in 1..{2 * self.g + 2} for g={self.g}")
        if self.command == "thm12" and self.g > vk.THM12_G_MAX:
            raise UsageError(f"thm12 is limited to g <= {vk.THM12_G_MAX}")
        if self.command == "verify" and not 2 <= self.g_min <= self.g_max:
            raise UsageError("need 2 <= --g-min <= --g-max")
        return self


@contextmanager
def _sink(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def cmd_present(cfg: CliConfig, out) -> int:
    exp = vk.theorem_expectation(cfg.family, cfg.g, cfg.n)
    if cfg.n > 3:
        if cfg.format == "json":
            payload = {"family": cfg.family, "g": cfg.g, "n": cfg.n, "simplified": exp.ring_text,
                       "status": vk.ASSERTED_NOTE}
            out.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            out.write(f"{exp.ring_text}\n({vk.ASSERTED_NOTE})\n")
        return EXIT_OK
    check = vk.reproduce_presentation(cfg.family, cfg.g, cfg.n)
    pres = cc.weierstrass_presentation(cfg.family, cfg.g, cfg.n)
    simplified = vk.render_cyclic(cfg.family, check.witness["order"])
    if cfg.format == "json":
        payload = pres.to_json()
        payload["simplified"] = simplified
        payload["checks_pass"] = check.passed
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(f"family={cfg.family} g={cfg.g} n={cfg.n} rank={pres.rank} ring={pres.ring}\n")
        out.write("relations:\n")
        for name, rel in zip(pres.relation_names, pres.relations):
            out.write(f"  {name}: {rel}\n")
        out.write("simplified:\n")
        out.write(f"{simplified}\n")
    return EXIT_OK if check.passed else EXIT_CHECK_FAILED


def cmd_picard(cfg: CliConfig, out) -> int:
    exp = vk.theorem_expectation(cfg.family, cfg.g, cfg.n)
    if cfg.n > 3:
        desc = "trivial" if exp.expected_order == 1 else f"Z/{exp.expected_order}"
        gen = ", generator psi" if cfg.family == "H" and exp.expected_order > 1 else ""
        if cfg.format == "json":
            out.write(json.dumps({"family": cfg.family, "g": cfg.g, "n": cfg.n, "order": exp.expected_order,
                                  "status": vk.ASSERTED_NOTE}, sort_keys=True) + "\n")
        else:
            out.write(f"{desc}{gen}\n({vk.ASSERTED_NOTE})\n")
        return EXIT_OK
    rep = vk.compute_reproduction(cfg.family, cfg.g, cfg.n)
    torsion = [d for d in rep.invariant_factors if d != 1]
    desc = " + ".join(f"Z/{d}" for d in torsion) or "trivial"
    gen_name = None
    if rep.generators:
        gen_name = next(reversed(rep.generators)) if cfg.family == "H" else next(iter(rep.generators))
    ok = rep.order == vk.theorem_expectation(cfg.family, cfg.g, cfg.n).expected_order
    if gen_name is not None:
        vec, order = rep.generators[gen_name]
        ok = ok and order == rep.order
    if cfg.format == "json":
        payload = {
            "family": cfg.family,
            "g": cfg.g,
            "n": cfg.n,
            "relations": rep.matrix,
            "invariant_factors": list(rep.invariant_factors),
            "order": rep.order,
            "generator": gen_name,
            "generator_vector": rep.generators[gen_name][0] if gen_name else None,
            "generator_order": rep.generators[gen_name][1] if gen_name else None,
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        line = desc
        if gen_name is not None:
            vec, order = rep.generators[gen_name]
            cls = cc.RING_L.linear(vec) if len(vec) == 2 else cc.RING_RANK1.linear(vec)
            line += f", generator {gen_name} = {cls} (order {order})"
        out.write(line + "\n")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_verify(cfg: CliConfig, out) -> int:
    report = vk.run_all(cfg.g_min, cfg.g_max)
    out.write(report.to_jsonl() if cfg.format == "json" else report.to_text() + "\n")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_thm12(cfg: CliConfig, out) -> int:
    res = vk.thm12_check(cfg.g)
    if cfg.format == "json":
        out.write(json.dumps(res.to_json(), sort_keys=True) + "\n")
    else:
        out.write(f"p = {cc.thm12_polynomial(cfg.g)}\n")
        out.write(f"weighted degree {res.witness['degree']}\n")
        out.write(f"normal form = {res.witness['remainder']}\n")
        out.write(("not in the ideal" if res.passed else "CHECK FAILED") + "\n")
    return EXIT_OK if res.passed else EXIT_CHECK_FAILED


COMMANDS = {"present": cmd_present, "picard": cmd_picard, "verify": cmd_verify, "thm12": cmd_thm12}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperchow",
        description="Integral Chow rings of stacks of hyperelliptic Weierstrass points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", "-o", help="write to this file instead of stdout")

    for name, help_ in (("present", "print the torus presentation"), ("picard", "Picard group and generator")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--family", choices=("H", "M0"), default="H")
        p.add_argument("--g", type=int, required=True)
        p.add_argument("--n", type=int, default=1)
        common(p)

    p = sub.add_parser("verify", help="run the reproduction suite")
    p.add_argument("--g-min", type=int, default=2)
    p.add_argument("--g-max", type=int, default=6)
    common(p)

    p = sub.add_parser("thm12", help="non-membership of the degree 2g+3 relation")
    p.add_argument("--g", type=int, required=True)
    common(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    fields = {k: v for k, v in vars(args).items() if k in CliConfig.__dataclass_fields__ and v is not None}
    try:
        cfg = CliConfig(**fields).validate()
    except UsageError as err:
        print(f"hyperchow: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    with _sink(cfg.output) as out:
        return COMMANDS[cfg.command](cfg, out)


if __name__ == "__main__":
    sys.exit(main())
