"""
Suite Registry

Central registry of the verification suites the CLI can run.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegisteredSuite:
    name: str
    body: Callable
    description: str = ""


class SuiteRegistry:
    """Registry of all suite bodies by name."""

    def __init__(self):
        self._suites: Dict[str, RegisteredSuite] = {}

    def register(self, name: str, body: Callable, description: str = "") -> None:
        """
        Register a suite body.

        Args:
            name: Suite name as typed on the command line
            body: Callable taking a RunConfig and returning a SuiteOutcome
            description: One line shown by `cotype-bench --help`
        """
        if name in self._suites:
            logger.warning(f"Suite {name} already registered, overwriting")
        self._suites[name] = RegisteredSuite(name, body, description)
        logger.debug(f"Registered suite: {name}")

    def get(self, name: str) -> Optional[RegisteredSuite]:
        return self._suites.get(name)

    def list_suites(self) -> List[str]:
        """Suite names in registration order."""
        return list(self._suites.keys())

    def is_registered(self, name: str) -> bool:
        return name in self._suites


# Global registry instance
registry = SuiteRegistry()
