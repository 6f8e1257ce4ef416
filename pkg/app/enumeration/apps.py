from django.apps import AppConfig


class EnumerationConfig(AppConfig):
    name = 'enumeration'
    verbose_name = 'Brute-force enumeration'
