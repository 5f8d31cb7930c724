from hypothesis import HealthCheck, settings

settings.register_profile(
    "battery",
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("battery")
