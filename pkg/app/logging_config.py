"""
Centralized logging configuration for QuditMap.
Provides coloured, category-tagged logs to the terminal.

Usage in any module:
    import logging
    logger = logging.getLogger(__name__)
"""

import logging
import sys
from datetime import datetime
from typing import TextIO


# ── ANSI colours for terminal ──────────────────────────────────────────
class Colours:
    RESET   = "\033[0m"
    BOLD    = "\033[1m"
    DIM     = "\033[2m"
    # Levels
    DEBUG   = "\033[36m"     # cyan
    INFO    = "\033[32m"     # green
    WARNING = "\033[33m"     # yellow
    ERROR   = "\033[31m"     # red
    CRITICAL = "\033[41m"    # red bg
    # Categories
    IR      = "\033[34m"     # blue
    SIM     = "\033[96m"     # bright cyan
    MAP     = "\033[95m"     # bright magenta
    COST    = "\033[35m"     # magenta
    IO      = "\033[37m"     # white


LEVEL_COLOURS = {
    "DEBUG":    Colours.DEBUG,
    "INFO":     Colours.INFO,
    "WARNING":  Colours.WARNING,
    "ERROR":    Colours.ERROR,
    "CRITICAL": Colours.CRITICAL,
}

# Map logger names to short tags + colours (first matching prefix wins)
CATEGORY_MAP = {
    "app.models":                  ("IR",      Colours.IR),
    "app.simulation.dense":        ("DENSE",   Colours.SIM),
    "app.simulation":              ("SIM",     Colours.SIM),
    "app.mapping":                 ("MAP",     Colours.MAP),
    "app.services.cost_model":     ("COST",    Colours.COST),
    "app.services.verification":   ("VERIFY",  Colours.MAP),
    "app.ingestion":               ("IO",      Colours.IO),
    "app.fixtures":                ("IO",      Colours.IO),
    "app.routers":                 ("API",     Colours.INFO),
    "app.cli":                     ("CLI",     Colours.BOLD),
    "main":                        ("SERVER",  Colours.BOLD),
}


class QuditMapFormatter(logging.Formatter):
    """Custom formatter: coloured level + category tag + message."""

    def __init__(self, colour: bool = True):
        super().__init__()
        self.colour = colour

    def _paint(self, code: str, text: str) -> str:
        return f"{code}{text}{Colours.RESET}" if self.colour else text

    def format(self, record: logging.LogRecord) -> str:
        ts = datetime.fromtimestamp(record.created).strftime("%H:%M:%S.%f")[:-3]

        level_colour = LEVEL_COLOURS.get(record.levelname, Colours.RESET)
        level_tag = self._paint(level_colour, f"{record.levelname:<7}")

        cat_tag = ""
        cat_colour = Colours.DIM
        for prefix, (tag, colour) in CATEGORY_MAP.items():
            if record.name.startswith(prefix):
                cat_tag = tag
                cat_colour = colour
                break
        if not cat_tag:
            # Fallback: last part of logger name
            cat_tag = record.name.rsplit(".", 1)[-1].upper()[:10]

        category = self._paint(cat_colour, f"[{cat_tag}]")

        msg = record.getMessage()

        exc = ""
        if record.exc_info and record.exc_info[0]:
            exc = f"\n{self.formatException(record.exc_info)}"

        return f"{self._paint(Colours.DIM, ts)} {level_tag} {category} {msg}{exc}"


def setup_logging(level: str = "INFO", stream: TextIO | None = None):
    """Configure root logger with the QuditMap formatter.

    Call once at startup: the server logs to stdout, the CLI passes stderr so
    that stdout carries only results.
    """
    stream = stream or sys.stdout
    root = logging.getLogger()
    root.setLevel(getattr(logging, level.upper(), logging.INFO))

    # Remove any existing handlers
    for h in root.handlers[:]:
        root.removeHandler(h)

    handler = logging.StreamHandler(stream)
    handler.setFormatter(QuditMapFormatter(colour=stream.isatty()))
    root.addHandler(handler)

    # Quiet down noisy third-party loggers
    logging.getLogger("uvicorn.access").setLevel(logging.WARNING)
    logging.getLogger("uvicorn.error").setLevel(logging.INFO)
    logging.getLogger("httpcore").setLevel(logging.WARNING)
    logging.getLogger("httpx").setLevel(logging.WARNING)

    logging.getLogger("main").debug("Logging initialised (level=%s)", level)
