from routes.torsion import router as torsion_router
