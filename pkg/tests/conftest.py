from hypothesis import settings

# mpmath-heavy properties have wildly varying first-call cost (cache warmup);
# wall-clock deadlines would only produce flaky failures
settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")
