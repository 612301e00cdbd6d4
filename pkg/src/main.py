from fastapi import FastAPI

from routes import torsion_router

app = FastAPI(
    title="Orbifold torsion toolkit",
    description="Trace-formula contributions to the analytic torsion of hyperbolic orbifolds"
)

api_version_prefix = "/api/v1"

app.include_router(torsion_router, prefix=f"{api_version_prefix}/torsion", tags=["torsion"])
