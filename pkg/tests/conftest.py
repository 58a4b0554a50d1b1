from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA, RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for criterion in CRITERIA:
            if criterion in RESULTS:
                terminalreporter.write_line(RESULTS[criterion])
