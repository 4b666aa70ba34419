"""Experiment orchestration behind the command-line interface."""

from .experiments import FORMATS, Command, ExperimentRunner, RunConfig

__all__ = ['Command', 'FORMATS', 'RunConfig', 'ExperimentRunner']
