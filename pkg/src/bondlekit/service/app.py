"""FastAPI service exposing the coloring/state-sum toolkit.

Every endpoint is a stateless wrapper over the core package: bondles and
weights arrive as their JSON documents, diagrams as .bgc text.  Domain
errors (bad algebra parameters, malformed diagrams, invalid tables) map to
HTTP 422 with a plain-text detail.
"""

from __future__ import annotations

import random
import time

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..algebra import (
    BondleError,
    FiniteBondle,
    affine_bondle,
    check_bondle,
    check_quandle,
    check_singquandle,
    search_affine_bondles,
)
from ..diagram import BondedDiagram, DiagramError, insert_r1, insert_r2, parse_bgc
from ..solver import count_colorings, count_colorings_affine, enumerate_colorings
from ..statesum import state_sum
from ..weights import BoltzmannWeights, check_weights, search_weights
from ..cluster import cluster
from . import schemas as S


def _load_bondle(req_bondle: S.BondleDoc | None, req_affine: S.AffineParams | None) -> FiniteBondle:
    if (req_bondle is None) == (req_affine is None):
        raise BondleError("provide exactly one of 'bondle' and 'affine'")
    if req_affine is not None:
        return affine_bondle(req_affine.n, req_affine.a, req_affine.b, req_affine.m)
    return FiniteBondle.from_json(req_bondle.model_dump())


def _bondle(doc: S.BondleDoc) -> FiniteBondle:
    return FiniteBondle.from_json(doc.model_dump())


def _weights(doc: S.WeightsDoc) -> BoltzmannWeights:
    return BoltzmannWeights.from_json(doc.model_dump())


def _diagram(text: str) -> BondedDiagram:
    return parse_bgc(text)


def create_app() -> FastAPI:
    app = FastAPI(title="bondlekit", version=__version__)

    @app.exception_handler(BondleError)
    @app.exception_handler(DiagramError)
    @app.exception_handler(ValueError)
    async def _domain_error(request: Request, exc: Exception) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health", response_model=S.HealthResponse)
    def health() -> S.HealthResponse:
        return S.HealthResponse(status="ok", version=__version__)

    @app.post("/check", response_model=S.CheckResponse)
    def check(req: S.CheckRequest) -> S.CheckResponse:
        B = _load_bondle(req.bondle, req.affine)
        level = req.level
        if level == "auto":
            level = "bondle" if B.r3 is not None else "singquandle"
        checker = {
            "quandle": check_quandle,
            "singquandle": check_singquandle,
            "bondle": check_bondle,
        }[level]
        report = checker(B)
        return S.CheckResponse(
            level=level,
            report=S.AxiomReportDoc(**report.to_json()),
            bondle=S.BondleDoc(**B.to_json()),
        )

    @app.post("/weights/check", response_model=S.WeightsCheckResponse)
    def weights_check(req: S.WeightsCheckRequest) -> S.WeightsCheckResponse:
        report = check_weights(_bondle(req.bondle), _weights(req.weights))
        return S.WeightsCheckResponse(report=S.AxiomReportDoc(**report.to_json()))

    @app.post("/color", response_model=S.ColorResponse)
    def color(req: S.ColorRequest) -> S.ColorResponse:
        D = _diagram(req.diagram)
        B = _bondle(req.bondle)
        engines = []
        if req.engine in ("backtrack", "both"):
            t0 = time.perf_counter()
            c = count_colorings(D, B)
            engines.append(S.EngineTiming(engine="backtrack", count=c, seconds=time.perf_counter() - t0))
        if req.engine in ("affine", "both"):
            t0 = time.perf_counter()
            c = count_colorings_affine(D, B)
            engines.append(S.EngineTiming(engine="affine", count=c, seconds=time.perf_counter() - t0))
        counts = {e.count for e in engines}
        if len(counts) != 1:
            raise BondleError(f"engine disagreement: {[ (e.engine, e.count) for e in engines ]}")
        colorings = None
        truncated = False
        if req.enumerate:
            cols, truncated = enumerate_colorings(D, B, req.limit)
            colorings = [list(c.assignment) for c in cols]
        return S.ColorResponse(
            count=counts.pop(), engines=engines, colorings=colorings, truncated=truncated
        )

    @app.post("/statesum", response_model=S.StateSumResponse)
    def statesum(req: S.StateSumRequest) -> S.StateSumResponse:
        D = _diagram(req.diagram)
        ss = state_sum(D, _bondle(req.bondle), _weights(req.weights))
        return S.StateSumResponse(
            m=ss.m, coeffs=list(ss.coeffs), rendered=ss.render(), colorings=ss.total
        )

    @app.post("/cluster", response_model=S.ClusterResponse)
    def cluster_endpoint(req: S.ClusterRequest) -> S.ClusterResponse:
        diagrams = {name: _diagram(text) for name, text in req.diagrams.items()}
        report = cluster(diagrams, _bondle(req.bondle), _weights(req.weights))
        return S.ClusterResponse(**report.to_json())

    @app.post("/moves", response_model=S.MovesResponse)
    def moves(req: S.MovesRequest) -> S.MovesResponse:
        D = _diagram(req.diagram)
        B = _bondle(req.bondle)
        W = _weights(req.weights) if req.weights is not None else None
        base_count = count_colorings(D, B)
        base_rendered = state_sum(D, B, W).render() if W is not None else None
        rng = random.Random(req.seed)
        failures: list[S.MovesFailure] = []
        for step in range(req.moves):
            pos = rng.randrange(len(D.events) + 1)
            if rng.random() < 0.5:
                sign = rng.choice((1, -1))
                moved = insert_r1(D, pos, sign)
                move = f"r1@{pos}{'+' if sign > 0 else '-'}"
            else:
                moved = insert_r2(D, pos)
                move = f"r2@{pos}"
            c = count_colorings(moved, B)
            r = state_sum(moved, B, W).render() if W is not None else None
            if c != base_count or r != base_rendered:
                failures.append(
                    S.MovesFailure(
                        step=step, move=move, diagram=moved.serialize(), count=c, rendered=r
                    )
                )
        return S.MovesResponse(
            applied=req.moves,
            count=base_count,
            rendered=base_rendered,
            invariant=not failures,
            failures=failures,
        )

    @app.post("/search/bondles", response_model=S.SearchBondlesResponse)
    def search_bondles(req: S.SearchBondlesRequest) -> S.SearchBondlesResponse:
        triples, checked = search_affine_bondles(req.n, with_r3=req.with_r3)
        return S.SearchBondlesResponse(
            triples=[S.AffineParams(n=req.n, a=a, b=b, m=m) for a, b, m in triples],
            checked=checked,
        )

    @app.post("/search/weights", response_model=S.SearchWeightsResponse)
    def search_weights_endpoint(req: S.SearchWeightsRequest) -> S.SearchWeightsResponse:
        solutions, truncated = search_weights(_bondle(req.bondle), req.m, req.budget)
        return S.SearchWeightsResponse(
            solutions=[S.WeightsDoc(**w.to_json()) for w in solutions], truncated=truncated
        )

    return app


app = create_app()
