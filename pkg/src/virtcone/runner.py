"""Execute parsed scripts and format results.

Machine format is line-based and byte-deterministic for a fixed
(script, seed, redraws) triple; timing appears only in the human format.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .chow import ChowClass, ChernSeries, residual_contribution
from .cones import SchemePresentation, normal_cone_ideal, scheme
from .context import Budget, Context
from .deform import FamilyIdeal, flat_limit
from .errors import VirtconeError
from .ideals import Ideal, ideal, rehome
from .lang import (
    LetFamily,
    LetScheme,
    LetTwists,
    PrintCone,
    PrintDegrees,
    PrintFlatlimit,
    PrintResidual,
    PrintSegre,
    PrintVclass,
    Script,
)
from .poly import Grevlex, Lex, Polynomial, PolyRing, poly_str
from .rationals import Q, rat_str
from .segre import projective_degrees, segre_ambient, segre_in
from .virtual import ObstructionTwists, virtual_class


@dataclass(frozen=True)
class ResultRecord:
    directive: str           # echo of the directive
    kind: str                # "class" | "int" | "ints" | "ideal"
    payload: object          # ChowClass | int | tuple[int] | tuple[str]
    warnings: tuple = field(default=())
    millis: int = 0


def _series_from_poly(p: Polynomial, m: int) -> ChernSeries:
    coeffs = [Q(0)] * (m + 1)
    for e, c in p.terms.items():
        if e[0] <= m:
            coeffs[e[0]] = c
    return ChernSeries(m, tuple(coeffs))


class Runner:
    def __init__(self, script: Script, ctx: Context,
                 saturate_limits: bool = True, attest_containment: bool = False,
                 order: str = "grevlex"):
        self.script = script
        self.ctx = ctx
        self.saturate_limits = saturate_limits
        self.attest_containment = attest_containment
        if script.ambient is None:
            self.ring = None
            self.mode = None
            self.schemes = {}
            self.twists = {}
            self.families = {}
            return
        self.ring = PolyRing(script.ambient.names,
                             order=Lex() if order == "lex" else Grevlex())
        self.mode = script.ambient.mode
        self.schemes = {}
        self.twists = {}
        self.families = {}

    def _scheme(self, st: LetScheme) -> SchemePresentation:
        relations = ()
        if st.inside is not None:
            relations = self.schemes[st.inside].full_ideal.generators
        gens = [rehome(p, self.ring) for p in st.polys]
        return scheme(self.ring, gens, relations, self.mode)

    def _presentation(self, target: str, inside: str | None) -> SchemePresentation:
        X = self.schemes[target]
        if inside is None:
            return X
        Y = self.schemes[inside]
        return SchemePresentation(self.ring, X.ideal, Y.full_ideal, self.mode)

    def run(self):
        records = []
        for st in self.script.statements:
            if isinstance(st, LetScheme):
                self.schemes[st.name] = self._scheme(st)
            elif isinstance(st, LetTwists):
                self.twists[st.name] = st.twists
            elif isinstance(st, LetFamily):
                fam_ring = self.ring.with_variables(
                    st.extra_vars + (st.param,),
                    extra_weights=(1,) * len(st.extra_vars) + (0,))
                polys = [rehome(p, fam_ring) for p in st.polys]
                self.families[st.name] = FamilyIdeal(ideal(fam_ring, *polys), st.param)
            else:
                start = time.monotonic()
                try:
                    rec = self._directive(st)
                except VirtconeError as e:
                    raise VirtconeError(
                        f"{st.line}:{st.col}: in `{self._echo(st)}`: {e}") from e
                millis = int((time.monotonic() - start) * 1000)
                records.append(ResultRecord(rec.directive, rec.kind, rec.payload,
                                            rec.warnings, millis))
        return records

    def _echo(self, st) -> str:
        if isinstance(st, PrintSegre):
            tail = f" in {st.inside}" if st.inside else ""
            return f"segre({st.target}{tail})"
        if isinstance(st, PrintCone):
            tail = f" in {st.inside}" if st.inside else ""
            return f"cone({st.target}{tail})"
        if isinstance(st, PrintVclass):
            if isinstance(st.bundle, str):
                return f"vclass({st.target}, {st.bundle})"
            return f"vclass({st.target}, twists({', '.join(map(str, st.bundle))}))"
        if isinstance(st, PrintDegrees):
            return f"degrees({st.target})"
        if isinstance(st, PrintFlatlimit):
            return f"flatlimit({st.target})"
        if isinstance(st, PrintResidual):
            return (f"residual({poly_str(st.normal)}, "
                    f"{poly_str(st.tangent_ambient)}, {poly_str(st.tangent_source)})")
        raise TypeError(f"not a directive: {st!r}")

    def _directive(self, st) -> ResultRecord:
        echo = self._echo(st)
        if isinstance(st, PrintSegre):
            X = self._presentation(st.target, st.inside)
            gens = self.schemes[st.target].ideal.generators
            if st.inside is None:
                cls = segre_ambient(X, gens, self.ctx)
            else:
                cls = segre_in(X, gens, self.ctx)
            return ResultRecord(echo, "class", cls)
        if isinstance(st, PrintVclass):
            X = self.schemes[st.target]
            tw = self.twists[st.bundle] if isinstance(st.bundle, str) else st.bundle
            cls = virtual_class(X, ObstructionTwists(tw), self.ctx,
                                attest_containment=self.attest_containment)
            return ResultRecord(echo, "class", cls)
        if isinstance(st, PrintDegrees):
            X = self.schemes[st.target]
            degs = projective_degrees(X, X.ideal.generators, self.ctx)
            return ResultRecord(echo, "ints", tuple(degs))
        if isinstance(st, PrintCone):
            X = self._presentation(st.target, st.inside)
            gens = self.schemes[st.target].ideal.generators
            cone = normal_cone_ideal(X, gens, ctx=self.ctx)
            payload = tuple(poly_str(g) for g in cone.ideal.generators)
            return ResultRecord(echo, "ideal", payload, cone.warnings)
        if isinstance(st, PrintFlatlimit):
            F = self.families[st.target]
            lim = flat_limit(F, self.ctx, saturate_first=self.saturate_limits)
            return ResultRecord(echo, "ideal",
                                tuple(poly_str(g) for g in lim.generators))
        if isinstance(st, PrintResidual):
            m = len(self.ring.names) - 1
            if self.mode != "projective":
                raise VirtconeError("residual(...) needs a projective ambient")
            normal = _series_from_poly(st.normal, m)
            tamb = _series_from_poly(st.tangent_ambient, m)
            tsrc = _series_from_poly(st.tangent_source, m)
            value = residual_contribution([normal], tamb, tsrc,
                                          ChowClass.fundamental(m))
            if value != int(value):
                return ResultRecord(echo, "int", str(value))
            return ResultRecord(echo, "int", int(value))
        raise TypeError(f"not a directive: {st!r}")


def run(script: Script, ctx: Context, saturate_limits: bool = True,
        attest_containment: bool = False, order: str = "grevlex"):
    return Runner(script, ctx, saturate_limits, attest_containment, order).run()


def format_machine(records, ctx: Context) -> str:
    out = ["virtcone 1", f"seed {ctx.seed}", f"redraws {ctx.redraws}"]
    for i, r in enumerate(records, 1):
        out.append(f"begin {i} {r.directive}")
        for w in r.warnings:
            out.append(f"warning {w}")
        if r.kind == "class":
            coeffs = " ".join(rat_str(c) for c in r.payload.coeffs)
            out.append(f"class {r.payload.ambient_dim} {coeffs}")
        elif r.kind == "int":
            out.append(f"int {r.payload}")
        elif r.kind == "ints":
            out.append("ints " + " ".join(str(v) for v in r.payload))
        elif r.kind == "ideal":
            out.append(f"ideal {len(r.payload)}")
            out.extend(f"gen {g}" for g in r.payload)
        out.append(f"end {i}")
    return "\n".join(out) + "\n"


def format_human(records, ctx: Context) -> str:
    out = []
    for r in records:
        if r.kind == "class":
            body = str(r.payload)
        elif r.kind == "int":
            body = str(r.payload)
        elif r.kind == "ints":
            body = "[" + ", ".join(str(v) for v in r.payload) + "]"
        else:
            body = "(" + ", ".join(r.payload) + ")"
        out.append(f"{r.directive} = {body}"
                   f"  [seed={ctx.seed} redraws={ctx.redraws} time={r.millis}ms]")
        out.extend(f"  warning: {w}" for w in r.warnings)
    return "\n".join(out) + ("\n" if out else "")
