"""HTTP service exposing the analysis pipeline.

The /analysis endpoint serializes its payload with the canonical JSON
encoder, so its body is byte-identical to the CLI output for the same
request against the same corpus.
"""

from __future__ import annotations

from datetime import date as Date

from fastapi import FastAPI, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..analysis import AnalysisRequest, players_payload, run_analysis
from ..confrontation import Opponents
from ..corpus import Corpus
from ..errors import (
    AllZeroMatrix,
    AnchorUnobserved,
    CricRulesError,
    DegenerateMatrix,
    EmptySelection,
    InvalidFilter,
    RankZero,
    RosterError,
    UnknownPlayer,
)
from ..features import CATEGORY_ORDER
from ..jsonio import canonical_bytes
from ..lexicon import FeatureLexicon, default_lexicon
from .schemas import (
    AnalysisResponseModel,
    ErrorModel,
    HealthModel,
    PlayerEntryModel,
)

_HTTP_STATUS: dict[str, int] = {
    InvalidFilter.code: 400,
    RosterError.code: 400,
    UnknownPlayer.code: 404,
    EmptySelection.code: 422,
    AllZeroMatrix.code: 422,
    RankZero.code: 422,
    DegenerateMatrix.code: 422,
    AnchorUnobserved.code: 422,
}

_ANALYSIS_TYPES = {
    "bat": "batting",
    "bowl": "bowling",
    "batting": "batting",
    "bowling": "bowling",
}


def _parse_date(value: str | None, name: str) -> Date | None:
    if value is None:
        return None
    try:
        return Date.fromisoformat(value)
    except ValueError as exc:
        raise InvalidFilter(f"{name} must be an ISO-8601 date, got {value!r}") from exc


def create_app(
    corpus: Corpus,
    lexicon: FeatureLexicon | None = None,
    roster: dict[str, str] | None = None,
) -> FastAPI:
    lexicon = lexicon if lexicon is not None else default_lexicon()
    app = FastAPI(title="cricrules", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(CricRulesError)
    async def _domain_error(request: Request, exc: CricRulesError) -> JSONResponse:
        status = _HTTP_STATUS.get(exc.code, 500)
        body = ErrorModel.model_validate(
            {"error": {"code": exc.code, "message": str(exc)}}
        )
        return JSONResponse(status_code=status, content=body.model_dump())

    @app.get("/health", response_model=HealthModel)
    async def health() -> HealthModel:
        return HealthModel(
            status="ok",
            records=len(corpus.records),
            players=len(corpus.player_index),
            date_from=corpus.date_range[0].isoformat(),
            date_to=corpus.date_range[1].isoformat(),
        )

    @app.get("/players", response_model=list[PlayerEntryModel])
    async def players() -> list[PlayerEntryModel]:
        return [PlayerEntryModel.model_validate(e) for e in players_payload(corpus)]

    @app.get("/analysis", response_model=AnalysisResponseModel)
    async def analysis(
        player: str = Query(...),
        analysis_type: str = Query("bat", alias="type"),
        opponents: str = Query("all"),
        date_from: str | None = Query(None, alias="from"),
        date_to: str | None = Query(None, alias="to"),
        categories: str | None = Query(None),
        top_k: int = Query(3),
    ) -> Response:
        if analysis_type not in _ANALYSIS_TYPES:
            raise InvalidFilter(
                f"type must be 'bat' or 'bowl', got {analysis_type!r}"
            )
        if player not in corpus.player_index:
            raise UnknownPlayer(f"player {player!r} does not appear in the corpus")
        request = AnalysisRequest(
            player=player,
            analysis_type=_ANALYSIS_TYPES[analysis_type],
            opponents=Opponents.parse(opponents),
            date_from=_parse_date(date_from, "from"),
            date_to=_parse_date(date_to, "to"),
            categories=(
                tuple(c.strip() for c in categories.split(","))
                if categories
                else CATEGORY_ORDER
            ),
            top_k=top_k,
        )
        payload = run_analysis(corpus, lexicon, request, roster=roster)
        AnalysisResponseModel.model_validate(payload)
        return Response(content=canonical_bytes(payload), media_type="application/json")

    return app
