# pyright: reportMissingTypeStubs=false
# pyright: reportUnknownMemberType=false

# standard
from contextlib import asynccontextmanager

# third-party
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

# internal
from api.schemas import (
    CompareRequest,
    EstimateRequest,
    FunctionalUnitRequest,
    SweepRequest,
    TrainingRequest,
)
from profile_store import ProfileStore
from report import RenderedReport, Reporter


@asynccontextmanager
async def lifespan(app: FastAPI):
    app.state.profile_store = ProfileStore()
    app.state.reporter = Reporter(app.state.profile_store, app.state.profile_store.load_grid_table())

    yield


app = FastAPI(
    title="Compute Carbon - Life-Cycle Accounting API",
    version="0.1.0",
    lifespan=lifespan,
)


def _one_line(error: BaseException) -> str:
    return "; ".join(line.strip() for line in str(error).splitlines() if line.strip())


@app.exception_handler(FileNotFoundError)
async def profile_not_found(request: Request, exc: FileNotFoundError) -> JSONResponse:
    return JSONResponse(status_code=404, content={"detail": _one_line(exc)})


@app.exception_handler(ValueError)
async def invalid_input(request: Request, exc: ValueError) -> JSONResponse:
    """
    Every domain error is a ValueError; report it as unprocessable input.
    """
    return JSONResponse(status_code=422, content={"detail": _one_line(exc)})


@app.post("/estimate")
def estimate(request: EstimateRequest) -> RenderedReport:
    """
    Endpoint to estimate the life-cycle footprint of one profile.
    """
    reporter: Reporter = app.state.reporter

    return reporter.cmd_estimate(
        request.profile,
        grid_label=request.grid,
        lifetime=request.lifetime,
        paper_compat=request.paper_compat,
        report_format=request.format,
        intensity=request.intensity,
    )


@app.post("/compare")
def compare(request: CompareRequest) -> RenderedReport:
    reporter: Reporter = app.state.reporter

    return reporter.cmd_compare(
        request.profiles,
        grid_label=request.grid,
        lifetime=request.lifetime,
        paper_compat=request.paper_compat,
        report_format=request.format,
        intensity=request.intensity,
    )


@app.post("/sweep")
def sweep(request: SweepRequest) -> RenderedReport:
    reporter: Reporter = app.state.reporter

    return reporter.cmd_sweep(
        request.profile,
        request.parameter,
        request.values,
        grid_label=request.grid,
        lifetime=request.lifetime,
        paper_compat=request.paper_compat,
        report_format=request.format,
        intensity=request.intensity,
    )


@app.post("/training")
def training(request: TrainingRequest) -> RenderedReport:
    """
    Endpoint to compute the footprint of one training run.
    """
    reporter: Reporter = app.state.reporter

    return reporter.cmd_training(
        request.device_hours,
        request.power,
        overhead=request.overhead,
        grid_label=request.grid,
        report_format=request.format,
        intensity=request.intensity,
        compute_note=request.compute_note,
    )


@app.post("/fu")
def functional_unit(request: FunctionalUnitRequest) -> RenderedReport:
    reporter: Reporter = app.state.reporter

    return reporter.cmd_fu(
        request.profile,
        annual_units=request.units,
        usage_share=request.share,
        unit_name=request.unit_name,
        grid_label=request.grid,
        lifetime=request.lifetime,
        paper_compat=request.paper_compat,
        report_format=request.format,
        intensity=request.intensity,
    )


@app.get("/presets")
def presets() -> list[str]:
    """
    Endpoint to list the bundled profile presets.
    """
    return app.state.profile_store.index_presets()


@app.get("/health")
def health_check():
    """
    Health check endpoint.
    """
    return {"status": "ok"}
