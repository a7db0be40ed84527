import re
from dataclasses import dataclass, field
from typing import Dict

from . import catalog
from .errors import DomainError, UsageError

_COMPLEX_I = re.compile(r"(?<=[0-9.])i$")


def parse_complex(text):
    """Read ``0.5``, ``0.5j``, ``-0.3+0.1i`` or ``1e-3-2j`` as a complex number."""
    if isinstance(text, (int, float, complex)):
        return complex(text)
    cleaned = _COMPLEX_I.sub("j", str(text).strip().replace(" ", ""))
    try:
        return complex(cleaned)
    except ValueError:
        raise UsageError("cannot read %r as a complex number" % text)


def parse_param(text):
    """``k=v`` into ``(k, v)``; the value is coerced later by the catalog entry."""
    key, sep, value = text.partition("=")
    if not sep or not key.strip():
        raise UsageError("parameters are given as key=value, got %r" % text)
    return key.strip(), value.strip()


@dataclass(frozen=True)
class Target:
    name: str
    params: Dict[str, str] = field(default_factory=dict)

    @property
    def label(self):
        if not self.params:
            return self.name
        return "%s:%s" % (self.name, ",".join("%s=%s" % kv for kv in sorted(self.params.items())))

    @property
    def entry(self):
        return catalog.entry(self.name)

    def resolved(self):
        try:
            return self.entry.resolve(self.params)
        except DomainError as e:
            raise UsageError("target %s: %s" % (self.label, e))

    def build(self, order):
        try:
            return catalog.get(self.name, self.params, order=order)
        except DomainError as e:
            raise UsageError("target %s: %s" % (self.label, e))

    def known_values(self):
        return self.entry.known_values(self.params)


def parse_target(text, config, extra_params=()):
    """``name[:k=v,...]`` into targets.

    ``random`` takes a ``count`` pseudo-parameter that expands to that many
    seeds starting at the configured seed (``random_count`` when omitted); its
    degree and ``k`` default to the configured ones.
    """
    name, _, rest = text.partition(":")
    name = name.strip()
    params = dict(parse_param(p) for p in rest.split(",") if p.strip())
    entry = catalog.entry(name)
    for key, value in extra_params:
        if key in entry.params:
            params.setdefault(key, value)
    if name != "random":
        targets = [Target(name, params)]
    else:
        params.setdefault("degree", str(config["random_degree"]))
        params.setdefault("k", str(config["random_k"]))
        if "seed" in params and "count" in params:
            raise UsageError("random takes either seed or count, not both")
        try:
            count = int(params.pop("count", config["random_count"]))
        except ValueError:
            raise UsageError("count must be an integer in %r" % text)
        if "seed" in params:
            targets = [Target(name, params)]
        else:
            targets = [Target(name, dict(params, seed=str(config["seed"] + i))) for i in range(count)]
    for t in targets:
        t.resolved()
    return targets


def write_file(name, data):
    with open(name, "w") as fp:
        fp.write(data)
