import hypothesis

hypothesis.settings.register_profile("repo", deadline=None, max_examples=200)
hypothesis.settings.load_profile("repo")
