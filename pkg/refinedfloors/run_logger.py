import logging
import os
from datetime import datetime
from typing import Optional

from config import LOG_DIR, LOG_FORMAT


class RunLogger:
    """
    Centralized logging for a CLI run.
    Creates a log file per run id and routes every module logger into it.
    """

    _instance = None

    def __init__(self, run_id: str, log_dir: str = LOG_DIR):
        """
        Initialize the run logger.

        Args:
            run_id: Identifier used in the log file name
            log_dir: Directory receiving the log file
        """
        self.run_id = run_id
        self.log_dir = log_dir

        os.makedirs(self.log_dir, exist_ok=True)
        self.log_file = os.path.join(self.log_dir, f"run_{run_id}.log")

        with open(self.log_file, 'w', encoding='utf-8') as f:
            f.write("=== Refined Floor Run Log ===\n")
            f.write(f"Run ID: {run_id}\n")
            f.write(f"Started: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}\n")
            f.write("=" * 80 + "\n\n")

        # Root logger so the engine modules' loggers land in the same file
        root_logger = logging.getLogger()
        root_logger.setLevel(logging.INFO)
        root_logger.handlers = []

        file_handler = logging.FileHandler(self.log_file, mode='a', encoding='utf-8')
        file_handler.setLevel(logging.INFO)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root_logger.addHandler(file_handler)

        self.logger = logging.getLogger(f"Run_{run_id}")
        self.logger.setLevel(logging.INFO)
        self.logger.info("Logger initialized")

    def log_command_start(self, command: str, argv: list):
        """Log the subcommand and raw arguments"""
        self.logger.info("#" * 80)
        self.logger.info(f"###  COMMAND {command}  argv={argv}")
        self.logger.info("#" * 80)

    def log_polygon(self, vertices: list, summary: dict):
        """Log the normalized polygon and its combinatorial data"""
        self.logger.info(f"POLYGON: {vertices}")
        self.logger.info(f"DATA: {summary}")

    def log_enumeration(self, engine: str, classes: int, max_codegree: Optional[int]):
        """Log the outcome of a diagram enumeration"""
        bound = "none" if max_codegree is None else max_codegree
        self.logger.info(f"ENUMERATION ({engine}): {classes} classes, codegree bound {bound}")

    def log_verification(self, label: str, expected, computed, hypotheses_hold: bool):
        """Log a cross-verification result"""
        status = "EQUAL" if expected == computed else "DIFFERENT"
        self.logger.info(
            f"VERIFY {label}: enumerated={computed} universal={expected} "
            f"{status} (hypotheses {'hold' if hypotheses_hold else 'do not hold'})"
        )

    def log_error(self, error: str):
        """Log an error"""
        self.logger.error(f"ERROR: {error}")

    def log_run_end(self, exit_code: int):
        """Log the end of the run"""
        self.logger.info("#" * 80)
        self.logger.info(f"###  RUN END - exit code {exit_code}")
        self.logger.info("#" * 80)

    @classmethod
    def get_instance(cls, run_id: str = None, log_dir: str = LOG_DIR):
        """Get or create the singleton logger instance"""
        if cls._instance is None or (run_id and cls._instance.run_id != run_id):
            if run_id is None:
                raise ValueError("run_id required for first initialization")
            cls._instance = cls(run_id, log_dir)
        return cls._instance
