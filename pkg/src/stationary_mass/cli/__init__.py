from stationary_mass.cli.spec import ExperimentSpec
from stationary_mass.cli.commands import COMMANDS, run_bounds, run_estimate, run_evaluate, run_simulate, run_sweep

__all__ = ['COMMANDS', 'ExperimentSpec', 'run_bounds', 'run_estimate', 'run_evaluate', 'run_simulate', 'run_sweep']
