# McCoy/utils/registry.py

from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from McCoy.core.constructions import Bimodule, ProductRing, canonical_bimodule, prime_subring, regular_bimodule
from McCoy.core.ring import Ring, RingMap, is_commutative
from McCoy.utils.config_parser import RegistryParser
from McCoy.utils.exceptions import ConstructionError, UnknownName
from McCoy.utils.logger import logger
from McCoy.utils.messages import (
    MSG_BIMODULE_MISMATCH,
    MSG_FROBENIUS,
    MSG_SWAP_SHAPE,
    MSG_UNKNOWN_BIMODULE,
    MSG_UNKNOWN_SIGMA,
)

Evaluate = Callable[[str], Ring]


class SigmaPlugin(ABC):
    name: str = ""

    @classmethod
    @abstractmethod
    def matches(cls, name: str) -> bool:
        pass

    @abstractmethod
    def build(self, base: Ring) -> RingMap:
        pass


class IdentitySigma(SigmaPlugin):
    name = "id"

    @classmethod
    def matches(cls, name: str) -> bool:
        return name in ("id", "identity")

    def build(self, base: Ring) -> RingMap:
        return RingMap.identity(base)


class SwapSigma(SigmaPlugin):
    name = "swap"

    @classmethod
    def matches(cls, name: str) -> bool:
        return name == "swap"

    def build(self, base: Ring) -> RingMap:
        if not isinstance(base, ProductRing) or len(base.factors) != 2 or base.factors[0].label != base.factors[1].label:
            raise ConstructionError(MSG_SWAP_SHAPE.format(label=base.label))
        table = tuple(base.element(tuple(reversed(base.coords(x)))) for x in range(base.order))
        sigma = RingMap(base, base, table, name="swap")
        sigma.verify()
        return sigma


class FrobeniusSigma(SigmaPlugin):
    name = "frob"

    @classmethod
    def matches(cls, name: str) -> bool:
        return name in ("frob", "frobenius")

    def build(self, base: Ring) -> RingMap:
        p = len(prime_subring(base))
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)) or not is_commutative(base):
            raise ConstructionError(MSG_FROBENIUS.format(label=base.label))
        sigma = RingMap(base, base, tuple(base.power(x, p) for x in range(base.order)), name="frob")
        sigma.verify()
        return sigma


class BimodulePlugin(ABC):
    name: str = ""

    @classmethod
    @abstractmethod
    def matches(cls, name: str) -> bool:
        pass

    @abstractmethod
    def build(self, R: Ring, S: Ring, evaluate: Evaluate) -> Bimodule:
        pass


class RegularBimodule(BimodulePlugin):
    name = "regular"

    @classmethod
    def matches(cls, name: str) -> bool:
        return name == "regular"

    def build(self, R: Ring, S: Ring, evaluate: Evaluate) -> Bimodule:
        return regular_bimodule(R, S)


class CanonicalBimodule(BimodulePlugin):
    name = "canonical"

    @classmethod
    def matches(cls, name: str) -> bool:
        return name == "canonical"

    def build(self, R: Ring, S: Ring, evaluate: Evaluate) -> Bimodule:
        return canonical_bimodule(R, S)


class Registry:
    """Named σ endomorphisms and bimodules: built-in plugins plus TOML definitions."""

    def __init__(self, config_file: Optional[str] = None):
        parsed = RegistryParser(config_file).parse()
        self.sigma_defs = parsed.sigmas
        self.bimodule_defs = parsed.bimodules

    def sigma_names(self) -> List[str]:
        return sorted({p.name for p in SigmaPlugin.__subclasses__()} | set(self.sigma_defs))

    def bimodule_names(self) -> List[str]:
        return sorted({p.name for p in BimodulePlugin.__subclasses__()} | set(self.bimodule_defs))

    def has_sigma(self, name: str) -> bool:
        return name in self.sigma_defs or any(p.matches(name) for p in SigmaPlugin.__subclasses__())

    def has_bimodule(self, name: str) -> bool:
        return name in self.bimodule_defs or any(p.matches(name) for p in BimodulePlugin.__subclasses__())

    def sigma(self, name: str, base: Ring) -> RingMap:
        if name in self.sigma_defs:
            return self._table_sigma(name, base)
        for plugin_class in SigmaPlugin.__subclasses__():
            if plugin_class.matches(name):
                return plugin_class().build(base)
        raise UnknownName(MSG_UNKNOWN_SIGMA.format(name=name))

    def bimodule(self, name: str, R: Ring, S: Ring, evaluate: Evaluate) -> Bimodule:
        if name in self.bimodule_defs:
            return self._table_bimodule(name, R, S, evaluate)
        for plugin_class in BimodulePlugin.__subclasses__():
            if plugin_class.matches(name):
                return plugin_class().build(R, S, evaluate)
        raise UnknownName(MSG_UNKNOWN_BIMODULE.format(name=name))

    def _table_sigma(self, name: str, base: Ring) -> RingMap:
        body = self.sigma_defs[name]
        if body.get("ring") and "".join(body["ring"].split()) != base.label:
            raise ConstructionError(MSG_BIMODULE_MISMATCH.format(name=name, found=base.label, expected=body["ring"]))
        images = {base.index_of(src): base.index_of(dst) for src, dst in body["map"].items()}
        # unlisted elements are fixed
        sigma = RingMap(base, base, tuple(images.get(x, x) for x in range(base.order)), name=name)
        sigma.verify()
        logger.debug(f"Built sigma '{name}' on {base.label} from registry table")
        return sigma

    def _table_bimodule(self, name: str, R: Ring, S: Ring, evaluate: Evaluate) -> Bimodule:
        body = self.bimodule_defs[name]
        carrier = evaluate(body["carrier"])
        left = np.array([[carrier.index_of(x) for x in row] for row in body["left_action"]], dtype=np.int64)
        right = np.array([[carrier.index_of(x) for x in row] for row in body["right_action"]], dtype=np.int64)
        return Bimodule(name, R, S, carrier, left, right).verify()


def describe(registry: Registry) -> Dict[str, Any]:
    return {"sigma": registry.sigma_names(), "bimodule": registry.bimodule_names()}
