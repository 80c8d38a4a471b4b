import os
import tempfile

# log files of CLI tests go to a throwaway workspace
os.environ.setdefault('MASS_WORKSPACE_DIR', tempfile.mkdtemp(prefix='stationary-mass-tests-'))

import pytest  # noqa: E402

from stationary_mass.processes import IidModel, MarkovModel  # noqa: E402
from stationary_mass.seqcore import ingest_tokens  # noqa: E402


@pytest.fixture
def abac():
  return ingest_tokens(['a', 'b', 'a', 'c'])


@pytest.fixture
def sticky_chain():
  return MarkovModel(P=[[0.9, 0.1], [0.1, 0.9]])


@pytest.fixture
def fair_coin():
  return IidModel(pi=[0.5, 0.5])
