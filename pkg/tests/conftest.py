from hypothesis import HealthCheck, settings

# Property tests wrap exact solvers, so per-example deadlines are noise;
# derandomize keeps runs reproducible without a seed file.
settings.register_profile(
    "strongedge",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("strongedge")
