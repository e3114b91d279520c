# McCoy/utils/config_parser.py

import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from typing import Any, Dict, Optional

from McCoy.utils.exceptions import ConstructionError
from McCoy.utils.logger import logger
from McCoy.utils.messages import MSG_REGISTRY_LOAD


class RegistryParser:
    """Reads user σ and bimodule definitions from a TOML file.

    [sigma.NAME]      map = { "label" = "label", ... }, optional ring = "expr"
    [bimodule.NAME]   carrier = "expr", left_action = [[labels]], right_action = [[labels]]
    """

    def __init__(self, config_file: Optional[str] = None):
        self.config_file = config_file
        self.sigmas: Dict[str, Dict[str, Any]] = {}
        self.bimodules: Dict[str, Dict[str, Any]] = {}

    def parse(self) -> "RegistryParser":
        if not self.config_file:
            return self
        if not os.path.isfile(self.config_file):
            raise ConstructionError(MSG_REGISTRY_LOAD.format(path=self.config_file, error="file not found"))
        try:
            with open(self.config_file, "rb") as fh:
                data = tomllib.load(fh)
        except tomllib.TOMLDecodeError as e:
            logger.error(f"Error parsing registry file {self.config_file}: {e}", exc_info=True)
            raise ConstructionError(MSG_REGISTRY_LOAD.format(path=self.config_file, error=e)) from e

        for name, body in data.get("sigma", {}).items():
            if not isinstance(body, dict) or not isinstance(body.get("map"), dict):
                raise ConstructionError(MSG_REGISTRY_LOAD.format(path=self.config_file, error=f"sigma.{name} needs a 'map' table"))
            self.sigmas[name] = {"map": {str(k): str(v) for k, v in body["map"].items()}, "ring": body.get("ring")}

        for name, body in data.get("bimodule", {}).items():
            missing = [key for key in ("carrier", "left_action", "right_action") if key not in body]
            if missing:
                raise ConstructionError(MSG_REGISTRY_LOAD.format(path=self.config_file, error=f"bimodule.{name} lacks {', '.join(missing)}"))
            self.bimodules[name] = {
                "carrier": str(body["carrier"]),
                "left_action": [[str(x) for x in row] for row in body["left_action"]],
                "right_action": [[str(x) for x in row] for row in body["right_action"]],
            }

        logger.info(f"Loaded {len(self.sigmas)} sigma and {len(self.bimodules)} bimodule definitions from {self.config_file}")
        return self
