from django.apps import AppConfig


class MahonianConfig(AppConfig):
    name = 'mahonian'
    verbose_name = 'Mahonian triangles'
