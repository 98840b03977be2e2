from hypothesis import HealthCheck, settings

# exact arithmetic and sympy oracles are slow per example; keep runs bounded
settings.register_profile("default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")
