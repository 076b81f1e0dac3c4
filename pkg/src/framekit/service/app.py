"""FastAPI application exposing the analysis pipelines over HTTP.

All endpoints are stateless request/response wrappers around the core
library: the solves run synchronously (they take milliseconds at the model
sizes this library targets) and any domain failure maps to a 422 response
carrying the error's machine-readable name.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__, beam3d, fem1d, modelio
from ..errors import FrameKitError, InvalidArgumentError
from ..fem2d import quad8_rectangle, tri6_rectangle
from ..solve import SolverSettings, solve_elastic_critical_load, solve_linear_static
from . import schemas


def _settings(body: schemas.SolverSettingsIn) -> SolverSettings:
    return SolverSettings(
        condition_limit=body.condition_limit,
        eig_positivity_floor=body.eig_positivity_floor,
        complex_tolerance=body.complex_tolerance,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="framekit",
        version=__version__,
        description="Linear statics and elastic critical-load analysis for "
        "3D frames, plus 1D/2D finite-element utilities.",
    )

    @app.exception_handler(FrameKitError)
    async def _domain_error(_: Request, exc: FrameKitError) -> JSONResponse:
        return JSONResponse(
            status_code=422, content=modelio.error_report(exc.name, str(exc))
        )

    @app.get("/health", response_model=schemas.HealthReport)
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/analyze/static", response_model=schemas.StaticReport)
    def analyze_static(body: schemas.StaticRequest):
        model = body.model.to_frame_model()
        settings = _settings(body.settings)
        solution = solve_linear_static(model, settings)
        return modelio.static_report(model, solution, settings)

    @app.post("/analyze/buckling", response_model=schemas.BucklingReport)
    def analyze_buckling(body: schemas.BucklingRequest):
        model = body.model.to_frame_model()
        settings = _settings(body.settings)
        result = solve_elastic_critical_load(model, settings)
        return modelio.buckling_report(model, result, settings)

    @app.post("/mesh/1d", response_model=schemas.Mesh1DReport)
    def mesh_1d(body: schemas.Mesh1DRequest):
        mesh = fem1d.uniform_mesh(body.x_min, body.x_max, body.num_elements)
        return modelio.mesh1d_report(mesh)

    @app.post("/mesh/2d", response_model=schemas.Mesh2DReport)
    def mesh_2d(body: schemas.Mesh2DRequest):
        if body.kind == "tri6":
            build = tri6_rectangle
        elif body.kind == "quad8":
            build = quad8_rectangle
        else:
            raise InvalidArgumentError(f"unknown mesh kind {body.kind!r}")
        mesh = build(body.x_lo, body.y_lo, body.x_hi, body.y_hi, body.nx, body.ny)
        return modelio.mesh2d_report(mesh)

    @app.post("/element/elastic-stiffness", response_model=schemas.MatrixReport)
    def element_elastic(body: schemas.ElasticStiffnessRequest):
        k = beam3d.elastic_stiffness(
            body.E, body.nu, body.A, body.L, body.Iy, body.Iz, body.J
        )
        return modelio.matrix_report("elastic", k)

    @app.post("/element/geometric-stiffness", response_model=schemas.MatrixReport)
    def element_geometric(body: schemas.GeometricStiffnessRequest):
        k = beam3d.geometric_stiffness(
            body.L, body.A, body.I_rho,
            body.Fx2, body.Mx2, body.My1, body.Mz1, body.My2, body.Mz2,
        )
        return modelio.matrix_report("geometric", k)

    @app.post("/element/transformation", response_model=schemas.MatrixReport)
    def element_transformation(body: schemas.TransformationRequest):
        gamma = beam3d.transformation_matrix(body.p_i, body.p_j, body.local_z)
        return modelio.matrix_report("transformation", gamma)

    return app


app = create_app()
