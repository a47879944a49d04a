"""Config and profile documents.

JSON, UTF-8, lower_snake_case keys mirroring the RuConfig fields. Parsing is
strict: unknown keys, missing required keys and wrong value types raise
:class:`ParseError` naming the offending field; range violations surface as
the model's own :class:`ValidationError`. emit/parse round-trip exactly.
"""

import json
import os

from .errors import ParseError
from .model import AdaptationMode, RuConfig
from .scenario import LoadProfile, ProfileSegment, builtin_configs, typical_daily_profile

__all__ = [
    "parse_config",
    "emit_config",
    "parse_profile",
    "emit_profile",
    "write_presets",
    "PROFILE_FILENAME",
]

PROFILE_FILENAME = "daily-profile.json"

# document key -> RuConfig constructor keyword, in schema order
_REQUIRED = (
    ("name", "str"),
    ("num_trx_chains", "int"),
    ("num_layers", "int"),
    ("trp_watts", "number"),
    ("bandwidth_mhz", "number"),
    ("insertion_loss_db", "number"),
    ("layer_sinr_db", "number"),
    ("dl_ratio", "number"),
    ("pa_lineup_efficiency", "number"),
    ("dsp_efficiency_factor", "number"),
    ("adaptation", "mode"),
)
_OPTIONAL = (
    ("reference_bandwidth_mhz", "number"),
    ("pa_psu_efficiency", "number"),
    ("num_chips", "int"),
    ("chip_deactivation", "bool"),
    ("per_chain_power_watts", "object"),
    ("carrier_frequency_ghz", "number"),
    ("num_antenna_elements", "int"),
)
# nested per-chain keys -> RuConfig field names
_PER_CHAIN = (
    ("rfic_driver", "p_rfic_driver"),
    ("rfic_lna", "p_rfic_lna"),
    ("dfe_bb_tx", "p_dfe_bb_tx"),
    ("dfe_bb_rx", "p_dfe_bb_rx"),
    ("dfe_bb_static", "p_dfe_bb_static"),
)


def _load_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not well-formed JSON in {what}: {e.msg}",
                         line=e.lineno) from e


def _checked(value, kind, field):
    # bool is an int subclass, so reject it explicitly for numeric kinds
    if kind == "str":
        if not isinstance(value, str):
            raise ParseError("expected a string", field=field)
        return value
    if kind == "int":
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError("expected an integer", field=field)
        return value
    if kind == "number":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParseError("expected a number", field=field)
        return float(value)
    if kind == "bool":
        if not isinstance(value, bool):
            raise ParseError("expected true or false", field=field)
        return value
    if kind == "mode":
        if not isinstance(value, str):
            raise ParseError("expected a string", field=field)
        try:
            return AdaptationMode(value)
        except ValueError:
            allowed = ", ".join(m.value for m in AdaptationMode)
            raise ParseError(f"unknown adaptation {value!r}; expected one of "
                             f"{allowed}", field=field) from None
    if kind == "object":
        if not isinstance(value, dict):
            raise ParseError("expected an object", field=field)
        return value
    raise AssertionError(kind)


def parse_config(text):
    """Parse a config document into a validated RuConfig."""
    doc = _load_json(text, "config document")
    if not isinstance(doc, dict):
        raise ParseError("config document must be a JSON object")

    known = {k for k, _ in _REQUIRED} | {k for k, _ in _OPTIONAL}
    for key in doc:
        if key not in known:
            raise ParseError("unknown field", field=key)

    kwargs = {}
    for key, kind in _REQUIRED:
        if key not in doc:
            raise ParseError("missing required field", field=key)
        value = _checked(doc[key], kind, key)
        kwargs["adaptation_mode" if key == "adaptation" else key] = value
    for key, kind in _OPTIONAL:
        if key not in doc:
            continue
        value = _checked(doc[key], kind, key)
        if key == "per_chain_power_watts":
            known_sub = {k for k, _ in _PER_CHAIN}
            for sub in value:
                if sub not in known_sub:
                    raise ParseError("unknown field",
                                     field=f"per_chain_power_watts.{sub}")
            for sub, target in _PER_CHAIN:
                if sub in value:
                    kwargs[target] = _checked(
                        value[sub], "number", f"per_chain_power_watts.{sub}")
        else:
            kwargs[key] = value
    return RuConfig(**kwargs)  # range checks live in the constructor


def emit_config(config):
    """Render a RuConfig as a config document; parse_config inverts exactly."""
    doc = {
        "name": config.name,
        "num_trx_chains": config.num_trx_chains,
        "num_layers": config.num_layers,
        "trp_watts": config.trp_watts,
        "bandwidth_mhz": config.bandwidth_mhz,
        "insertion_loss_db": config.insertion_loss_db,
        "layer_sinr_db": config.layer_sinr_db,
        "dl_ratio": config.dl_ratio,
        "pa_lineup_efficiency": config.pa_lineup_efficiency,
        "dsp_efficiency_factor": config.dsp_efficiency_factor,
        "adaptation": config.adaptation_mode.value,
        "reference_bandwidth_mhz": config.reference_bandwidth_mhz,
        "pa_psu_efficiency": config.pa_psu_efficiency,
        "num_chips": config.num_chips,
        "chip_deactivation": config.chip_deactivation,
        "per_chain_power_watts": {
            "rfic_driver": config.p_rfic_driver,
            "rfic_lna": config.p_rfic_lna,
            "dfe_bb_tx": config.p_dfe_bb_tx,
            "dfe_bb_rx": config.p_dfe_bb_rx,
            "dfe_bb_static": config.p_dfe_bb_static,
        },
    }
    if config.carrier_frequency_ghz is not None:
        doc["carrier_frequency_ghz"] = config.carrier_frequency_ghz
    if config.num_antenna_elements is not None:
        doc["num_antenna_elements"] = config.num_antenna_elements
    return json.dumps(doc, indent=2) + "\n"


def parse_profile(text):
    """Parse a load-profile document: a JSON array of {hours, load_fraction}."""
    doc = _load_json(text, "profile document")
    if not isinstance(doc, list):
        raise ParseError("profile document must be a JSON array")
    segments = []
    for i, entry in enumerate(doc):
        locus = f"[{i}]"
        if not isinstance(entry, dict):
            raise ParseError("expected an object", field=locus)
        for key in entry:
            if key not in ("hours", "load_fraction"):
                raise ParseError("unknown field", field=f"{locus}.{key}")
        for key in ("hours", "load_fraction"):
            if key not in entry:
                raise ParseError("missing required field", field=f"{locus}.{key}")
        segments.append(ProfileSegment(
            hours=_checked(entry["hours"], "number", f"{locus}.hours"),
            load_fraction=_checked(entry["load_fraction"], "number",
                                   f"{locus}.load_fraction"),
        ))
    return LoadProfile(segments=tuple(segments))


def emit_profile(profile):
    doc = [{"hours": s.hours, "load_fraction": s.load_fraction}
           for s in profile.segments]
    return json.dumps(doc, indent=2) + "\n"


def write_presets(directory):
    """Write the four builtin config documents plus the daily profile.

    Returns the written paths, configs first, in builtin order.
    """
    os.makedirs(directory, exist_ok=True)
    paths = []
    for cfg in builtin_configs():
        path = os.path.join(directory, cfg.name.lower() + ".json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(emit_config(cfg))
        paths.append(path)
    path = os.path.join(directory, PROFILE_FILENAME)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_profile(typical_daily_profile()))
    paths.append(path)
    return paths
