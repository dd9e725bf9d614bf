import os
from dotenv import load_dotenv


class Config:
    """Configuration management class for the workbench"""

    def __init__(self):
        load_dotenv()
        self.states = int(os.getenv("BB_STATES", "5"))
        self.step_limit = int(os.getenv("BB_STEP_LIMIT", "100000000"))
        self.jobs = int(os.getenv("BB_JOBS", "1"))
        self.tape_capacity = int(os.getenv("BB_TAPE_CAPACITY", "1024"))
        self.log_level = os.getenv("BB_LOG_LEVEL", "INFO").upper()
        self.host = os.getenv("BB_HOST", "0.0.0.0")
        self.port = int(os.getenv("BB_PORT", "8080"))

        # Validate the environment-provided values
        self._validate_config()

    def _validate_config(self):
        """Validate that all configuration values are usable"""
        if self.states < 1:
            raise ValueError("BB_STATES must be at least 1")

        if self.step_limit < 1:
            raise ValueError("BB_STEP_LIMIT must be at least 1")

        if self.jobs < 1:
            raise ValueError("BB_JOBS must be at least 1")

        if self.tape_capacity < 1:
            raise ValueError("BB_TAPE_CAPACITY must be at least 1")

    @property
    def app_config(self):
        """Return application configuration as dictionary"""
        return {
            "states": self.states,
            "step_limit": self.step_limit,
            "jobs": self.jobs,
            "tape_capacity": self.tape_capacity,
            "log_level": self.log_level,
            "host": self.host,
            "port": self.port,
        }


# Global config instance
config = Config()
