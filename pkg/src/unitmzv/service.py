"""HTTP facade over the exact-arithmetic core.

Every endpoint is a thin adapter around a library call: requests are
validated by pydantic models, the core raises ValueError on domain
errors (translated to HTTP 400), and rationals travel as "p/q" strings
so nothing is ever rounded.  Run with `unitmzv serve` or point uvicorn
at `unitmzv.service:app`.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .depth import iterate_derivation1, leading_coefficient_table, leading_coefficients
from .ihara import derivation_transpose, transpose_matrix, transpose_matrix_csv
from .numeric import DEFAULT_ACCEL, DEFAULT_TERMS, FIXTURES, check_fixture, numeric_zeta
from .selftest import run_selftest
from .shuffle import regularize, shuffle
from .words import LinComb, format_lincomb, format_word, parse_word
from .zeta import ZetaArg, word_of_zeta, zeta_of_word

app = FastAPI(
    title="unitmzv",
    version=__version__,
    description="Exact leading coefficients of unit cyclotomic multiple zeta "
    "values at levels 2, 3, 4, plus the word-algebra toolkit behind them.",
)


@app.exception_handler(ValueError)
async def _value_error_handler(request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


# ---------------------------------------------------------------------------
# request bodies


class DecomposeRequest(BaseModel):
    N: int = Field(description="modulus, one of 2, 3, 4")
    eps: list[int] = Field(description="root exponents of the index, one per slot")


class ShuffleRequest(BaseModel):
    N: int
    w1: str = Field(description="comma-separated letters, x for the zero letter")
    w2: str


class RegularizeRequest(BaseModel):
    N: int
    word: str


class DeriveRequest(BaseModel):
    N: int
    word: str
    times: int = 1


class DualRequest(BaseModel):
    N: int
    weight: int = Field(description="weight drop of the derivation")
    word: str


class WordOfZetaRequest(BaseModel):
    N: int
    ks: list[int]
    eps: list[int]


class ZetaOfWordRequest(BaseModel):
    N: int
    word: str


class EvalRequest(BaseModel):
    N: int
    ks: list[int]
    eps: list[int]
    terms: int = DEFAULT_TERMS
    accel: int = DEFAULT_ACCEL


class TableRequest(BaseModel):
    N: int
    r: int = Field(description="depth; the table has N^r rows")


class FixtureCheckRequest(BaseModel):
    name: str
    terms: int = DEFAULT_TERMS
    accel: int = DEFAULT_ACCEL


class MatrixRequest(BaseModel):
    N: int
    weight: int = Field(description="weight drop of the derivation")
    source_weight: int
    source_depth: int
    format: Literal["json", "csv"] = "json"


class SelftestRequest(BaseModel):
    max_weight: int = 6


# ---------------------------------------------------------------------------
# response bodies


class HealthOut(BaseModel):
    status: str
    version: str


class TermOut(BaseModel):
    word: str
    coeff: str


class LinCombOut(BaseModel):
    N: int
    terms: list[TermOut]
    text: str


class CoeffsOut(BaseModel):
    N: int
    r: int
    a: Optional[str] = None
    b: Optional[str] = None
    c: Optional[str] = None


class WordOut(BaseModel):
    word: str
    weight: int
    depth: int
    convergent: bool


class ZetaOut(BaseModel):
    N: int
    ks: list[int]
    eps: list[int]
    convergent: bool
    text: str


class EvalOut(BaseModel):
    re: float
    im: float
    err: float


class TableRowOut(BaseModel):
    N: int
    r: int
    eps: list[int]
    word: str
    beta: Optional[str] = None
    beta_plus: Optional[str] = None
    beta_minus: Optional[str] = None
    a: Optional[str] = None
    b: Optional[str] = None
    c: Optional[str] = None


class TableOut(BaseModel):
    N: int
    r: int
    rows: list[TableRowOut]


class FixtureInfo(BaseModel):
    name: str
    N: int
    eps: list[int]
    tolerance: float
    note: str


class FixtureListOut(BaseModel):
    fixtures: list[FixtureInfo]


class PointOut(BaseModel):
    re: float
    im: float


class FixtureCheckOut(BaseModel):
    fixture: str
    predicted: PointOut
    numeric: PointOut
    residual: float
    tolerance: float
    passed: bool = Field(alias="pass")

    model_config = {"populate_by_name": True}


class MatrixOut(BaseModel):
    N: int
    derivation_weight: int
    source_weight: int
    source_depth: int
    rows: list[str]
    cols: list[str]
    entries: list[list[str]]


class MatrixCsvOut(BaseModel):
    csv: str


class CriterionOut(BaseModel):
    name: str
    passed: bool
    detail: str


class SelftestOut(BaseModel):
    passed: bool
    criteria: list[CriterionOut]


def _lincomb_out(x: LinComb) -> LinCombOut:
    obj = x.to_json_obj()
    return LinCombOut(N=obj["N"], terms=obj["terms"], text=format_lincomb(x))


# ---------------------------------------------------------------------------
# endpoints


@app.get("/health", response_model=HealthOut)
async def health() -> HealthOut:
    return HealthOut(status="ok", version=__version__)


@app.post("/decompose", response_model=CoeffsOut, response_model_exclude_none=True)
async def post_decompose(req: DecomposeRequest) -> CoeffsOut:
    coeffs = leading_coefficients(req.N, tuple(req.eps))
    return CoeffsOut(**coeffs.to_json_obj())


@app.post("/shuffle", response_model=LinCombOut)
async def post_shuffle(req: ShuffleRequest) -> LinCombOut:
    w1 = parse_word(req.w1, req.N)
    w2 = parse_word(req.w2, req.N)
    return _lincomb_out(shuffle(w1, w2))


@app.post("/regularize", response_model=LinCombOut)
async def post_regularize(req: RegularizeRequest) -> LinCombOut:
    return _lincomb_out(regularize(parse_word(req.word, req.N)))


@app.post("/derive", response_model=LinCombOut)
async def post_derive(req: DeriveRequest) -> LinCombOut:
    w = parse_word(req.word, req.N)
    x = LinComb.from_word(w)
    return _lincomb_out(iterate_derivation1(req.N, x, req.times))


@app.post("/dual", response_model=LinCombOut)
async def post_dual(req: DualRequest) -> LinCombOut:
    w = parse_word(req.word, req.N)
    return _lincomb_out(derivation_transpose(req.N, req.weight, w))


@app.post("/word-of-zeta", response_model=WordOut)
async def post_word_of_zeta(req: WordOfZetaRequest) -> WordOut:
    z = ZetaArg(req.N, tuple(req.ks), tuple(req.eps))
    w = word_of_zeta(z)
    return WordOut(
        word=format_word(w), weight=w.weight, depth=w.depth, convergent=z.is_convergent
    )


@app.post("/zeta-of-word", response_model=ZetaOut)
async def post_zeta_of_word(req: ZetaOfWordRequest) -> ZetaOut:
    z = zeta_of_word(parse_word(req.word, req.N))
    return ZetaOut(
        N=z.modulus,
        ks=list(z.ks),
        eps=list(z.eps),
        convergent=z.is_convergent,
        text=z.format(),
    )


@app.post("/eval", response_model=EvalOut)
async def post_eval(req: EvalRequest) -> EvalOut:
    z = ZetaArg(req.N, tuple(req.ks), tuple(req.eps))
    val = numeric_zeta(z, terms=req.terms, accel=req.accel)
    return EvalOut(**val.to_json_obj())


@app.post("/table", response_model=TableOut, response_model_exclude_none=True)
async def post_table(req: TableRequest) -> TableOut:
    rows = leading_coefficient_table(req.N, req.r)
    return TableOut(N=req.N, r=req.r, rows=[TableRowOut(**row.to_json_obj()) for row in rows])


@app.get("/fixtures", response_model=FixtureListOut)
async def get_fixtures() -> FixtureListOut:
    infos = [
        FixtureInfo(
            name=fx.name,
            N=fx.modulus,
            eps=list(fx.eps),
            tolerance=fx.tolerance,
            note=fx.note,
        )
        for fx in FIXTURES.values()
    ]
    return FixtureListOut(fixtures=infos)


@app.post("/fixtures/check", response_model=FixtureCheckOut)
async def post_fixture_check(req: FixtureCheckRequest) -> FixtureCheckOut:
    report = check_fixture(req.name, terms=req.terms, accel=req.accel)
    return FixtureCheckOut.model_validate(report.to_json_obj())


@app.post(
    "/derivation-matrix",
    response_model=Union[MatrixOut, MatrixCsvOut],
)
async def post_derivation_matrix(req: MatrixRequest):
    if req.format == "csv":
        text = transpose_matrix_csv(req.N, req.weight, req.source_weight, req.source_depth)
        return MatrixCsvOut(csv=text)
    obj = transpose_matrix(req.N, req.weight, req.source_weight, req.source_depth)
    return MatrixOut(**obj)


@app.post("/selftest", response_model=SelftestOut)
async def post_selftest(req: SelftestRequest) -> SelftestOut:
    results = run_selftest(max_weight=req.max_weight)
    return SelftestOut(
        passed=all(r.passed for r in results),
        criteria=[CriterionOut(name=r.name, passed=r.passed, detail=r.detail) for r in results],
    )
