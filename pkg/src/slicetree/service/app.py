"""FastAPI surface over the core library.

Every endpoint is a stateless wrapper around a pure library call; domain
errors come back as HTTP 400 with a structured {"error", "detail"} record
carrying the exception class name.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import __version__
from ..enumeration import EnumerationParams, enumerate_pruned, enumerate_sliced
from ..errors import CapExceeded, DomainError, NotLC
from ..serial import (
    census_to_obj,
    frac_str,
    profile_from_obj,
    profile_to_obj,
    trace_to_obj,
    tree_from_obj,
    tree_to_dot,
)
from ..surface import epsilon_data, ksb_volume, ksba_window, moduli_dimension
from ..trees import (
    canonical_key,
    height,
    is_pruned_stable,
    sum_weights,
    validate_pruned,
    validate_sliced,
)
from ..pruning import prune_with_order
from ..weierstrass import classify_profile, lc_factorize
from .schemas import (
    ClassifyRequest,
    ClassifyResponse,
    DotRequest,
    DotResponse,
    EnumerateRequest,
    EnumerateResponse,
    FormulasResponse,
    PruneRequest,
    PruneResponse,
    ValidateRequest,
    ValidateResponse,
    ViolationModel,
)


def create_app() -> FastAPI:
    app = FastAPI(title="slicetree", version=__version__)

    @app.exception_handler(DomainError)
    async def domain_error(request, exc: DomainError):
        return JSONResponse(status_code=400, content=exc.payload())

    @app.exception_handler(ValueError)
    async def value_error(request, exc: ValueError):
        return JSONResponse(
            status_code=400,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/health")
    async def health():
        return {"status": "ok", "version": __version__}

    @app.post("/api/validate", response_model=ValidateResponse)
    async def validate(req: ValidateRequest):
        p = tree_from_obj(req.tree.model_dump())
        report = (
            validate_sliced(p.tree) if req.target == "sliced" else validate_pruned(p)
        )
        out = ValidateResponse(
            ok=report.ok,
            violations=[
                ViolationModel(clause=v.clause, where=v.where, detail=v.detail)
                for v in report.violations
            ],
        )
        if report.ok:
            t = p.tree
            out.tsm_stable = all(
                j.twelfths > 0 or t.degree(v) >= 3 for v, j in t.jdeg.items()
            )
            out.pruned_stable = is_pruned_stable(p)
            out.height = frac_str(height(p))
            out.sum_weights = frac_str(sum_weights(p))
            out.canonical_key = canonical_key(p)
        return out

    @app.post("/api/prune", response_model=PruneResponse)
    async def prune_endpoint(req: PruneRequest):
        p = tree_from_obj(req.tree.model_dump())
        order = req.order if req.order is not None else req.policy
        trace = prune_with_order(p, order, with_snapshots=req.snapshots)
        obj = trace_to_obj(trace)
        return PruneResponse(
            input=obj["input"],
            events=obj["events"],
            final=obj["final"],
            rounds=trace.rounds,
            final_key=canonical_key(trace.final),
        )

    @app.post("/api/enumerate", response_model=EnumerateResponse)
    async def enumerate_endpoint(req: EnumerateRequest):
        params = EnumerationParams(
            height=req.height,
            target=req.target,
            max_vertices=req.max_vertices,
            max_entries=req.max_entries,
        )
        fn = enumerate_sliced if req.target == "sliced" else enumerate_pruned
        try:
            census = fn(params)
            return EnumerateResponse(census=census_to_obj(census))
        except CapExceeded as exc:
            return EnumerateResponse(
                census=census_to_obj(exc.partial),
                cap_exceeded=True,
                cap_message=str(exc),
            )

    @app.post("/api/classify", response_model=ClassifyResponse)
    async def classify_endpoint(req: ClassifyRequest):
        profile = profile_from_obj(req.profile.model_dump())
        points = classify_profile(profile)
        try:
            minimal, m = lc_factorize(profile)
            return ClassifyResponse(
                points=points,
                strictly_lc_count=m,
                minimal_profile=profile_to_obj(minimal),
            )
        except NotLC as exc:
            return ClassifyResponse(
                points=points,
                strictly_lc_count=sum(
                    1 for pt in points if pt["class"] == "strictly-lc"
                ),
                not_lc_reason=str(exc),
            )

    @app.get("/api/formulas", response_model=FormulasResponse)
    async def formulas(n: int, eps: str | None = None):
        lo, hi = ksba_window(n)
        out = FormulasResponse(
            n=n,
            window=f"({frac_str(lo)},{frac_str(hi)})",
            ksb_volume=frac_str(ksb_volume(n)),
            dimension=moduli_dimension(n),
        )
        if eps is not None:
            from fractions import Fraction

            e = Fraction(eps)
            c, v = epsilon_data(n, e)
            out.eps = frac_str(e)
            out.c_eps = frac_str(c)
            out.v_eps = frac_str(v)
        return out

    @app.post("/api/export/dot", response_model=DotResponse)
    async def export_dot(req: DotRequest):
        p = tree_from_obj(req.tree.model_dump())
        return DotResponse(dot=tree_to_dot(p, name=req.name))

    return app
