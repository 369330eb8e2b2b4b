"""Charge assignment, rule files and rule replay."""
from .charges import (POT, ChargeSpec, ChargeState, Transfer, charge_totals,
                      entity_name, initial_charges)
from .engine import ConservationError, Deficit, LemmaResult, run_ruleset, verify_lemma
from .rules import (BUILTIN_RULESETS, ExplicitTransfer, RuleSet, Selector,
                    TransferRule, builtin_ruleset_text, load_builtin,
                    parse_ruleset, parse_selector)
from .alternating import alternating_phases, phase_bounds
