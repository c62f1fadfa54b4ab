from hypothesis import settings

settings.register_profile('invar', deadline=None, print_blob=True)
settings.load_profile('invar')
