# test/conftest.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.

""" Pytest collection wiring for ‘testscenarios’ test cases. """

import inspect

from _pytest.unittest import UnitTestCase
import testscenarios


def make_scenario_init(base_class, parameters):
    """ Make an ``__init__`` setting `parameters` on each instance. """
    def __init__(self, *args, **kwargs):
        base_class.__init__(self, *args, **kwargs)
        for (key, value) in parameters.items():
            setattr(self, key, value)
    return __init__


def pytest_pycollect_makeitem(collector, name, obj):
    """ Expand each scenario of a `WithScenarios` class into its own class.

        ``WithScenarios.run`` multiplies a test inside one run, which
        pytest's unittest integration does not support; give pytest one
        test case class per scenario instead, as the ‘unittest’ loader
        does via ``generate_scenarios``.
        """
    if not (
            inspect.isclass(obj)
            and issubclass(obj, testscenarios.WithScenarios)
            and getattr(obj, 'scenarios', None)):
        return None
    collectors = []
    for (scenario_name, parameters) in obj.scenarios:
        scenario_class = type(
                obj.__name__, (obj,), dict(
                    __init__=make_scenario_init(obj, parameters),
                    scenarios=None, __module__=obj.__module__))
        scenario_class.__qualname__ = obj.__qualname__
        scenario_collector = UnitTestCase.from_parent(
                collector,
                name="{name}[{scenario}]".format(
                    name=name, scenario=scenario_name))
        scenario_collector._obj = scenario_class
        collectors.append(scenario_collector)
    return collectors
