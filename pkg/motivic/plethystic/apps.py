from django.apps import AppConfig


class PlethysticConfig(AppConfig):
    name = "plethystic"
