from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic_core import ValidationError
from controllers.MachineController import machine_router
from controllers.SearchController import search_router
from config import config
import uvicorn
import logging
from exception.exceptions import *

# Logging configuration
logging.basicConfig(
    level=config.log_level,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

logger = logging.getLogger(__name__)

# Create FastAPI application instance
app = FastAPI(
    title="Busy Beaver Workbench API",
    description="API for simulating, naming and recombining Busy Beaver machines",
    version="1.0.0"
)

# Generic Exception
@app.exception_handler(Exception)
def generic_exception_handler(request: Request, exc: Exception):
    logger.error(f"Unexpected error occurred: {exc}", exc_info=True)
    return JSONResponse(
        status_code=500,
        content={"message": "An unexpected error occurred", "details": str(exc)}
    )

# Custom exception
@app.exception_handler(MachineNameError)
def machine_name_exception_handler(request: Request, exc: MachineNameError):
    logger.error(f"Machine name error: {exc}")
    return JSONResponse(
        status_code=400,
        content={"message": "Invalid machine name", "details": str(exc), "position": exc.position}
    )

@app.exception_handler(ActionCodeError)
def action_code_exception_handler(request: Request, exc: ActionCodeError):
    logger.error(f"Action code error: {exc}")
    return JSONResponse(
        status_code=400,
        content={"message": "Invalid action code", "details": str(exc)}
    )

@app.exception_handler(RuleListError)
def rule_list_exception_handler(request: Request, exc: RuleListError):
    logger.error(f"Rule list error: {exc}")
    return JSONResponse(
        status_code=400,
        content={"message": "Invalid rule listing", "details": str(exc), "line": exc.line}
    )

@app.exception_handler(RecombinationError)
def recombination_exception_handler(request: Request, exc: RecombinationError):
    logger.error(f"Recombination error: {exc}")
    return JSONResponse(
        status_code=400,
        content={"message": "Invalid recombination", "details": str(exc)}
    )

@app.exception_handler(LineageError)
def lineage_exception_handler(request: Request, exc: LineageError):
    logger.error(f"Lineage error: {exc}")
    return JSONResponse(
        status_code=400,
        content={"message": "Invalid lineage", "details": str(exc)}
    )

@app.exception_handler(PoolLoadError)
def pool_load_exception_handler(request: Request, exc: PoolLoadError):
    logger.error(f"Pool load error: {exc}")
    return JSONResponse(
        status_code=400,
        content={"message": "Machine pool could not be loaded", "details": str(exc), "line": exc.line}
    )

@app.exception_handler(UnknownMachineError)
def unknown_machine_exception_handler(request: Request, exc: UnknownMachineError):
    logger.error(f"Unknown machine: {exc}")
    return JSONResponse(
        status_code=404,
        content={"message": "Machine not found", "details": str(exc)}
    )

@app.exception_handler(OutcomeNotHaltedError)
def outcome_not_halted_exception_handler(request: Request, exc: OutcomeNotHaltedError):
    logger.error(f"Outcome not halted: {exc}")
    return JSONResponse(
        status_code=409,
        content={"message": "The machine did not halt within the step limit", "details": str(exc)}
    )

@app.exception_handler(SearchOutputError)
def search_output_exception_handler(request: Request, exc: SearchOutputError):
    logger.error(f"Search output error: {exc}")
    return JSONResponse(
        status_code=500,
        content={"message": "Search records could not be written", "details": str(exc)}
    )

@app.exception_handler(ValidationError)
def validation_exception_handler(request: Request, exc: ValidationError):
    logger.error(f"Validation error: {exc}")
    return JSONResponse(
        status_code=422,
        content={"message": "Validation error occurred", "details": exc.errors(include_context=False)}
    )

app.include_router(machine_router)
app.include_router(search_router)

@app.get("/")
async def root():
    logger.info("Root endpoint accessed")
    return {"message": "Busy Beaver Workbench API is running"}

@app.get("/health")
async def health_check():
    logger.info("Health check endpoint accessed")
    return {"status": "healthy"}

# This is only needed if you want to run the file directly
if __name__ == "__main__":
    uvicorn.run(app, host=config.host, port=config.port)
