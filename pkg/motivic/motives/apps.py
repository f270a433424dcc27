from django.apps import AppConfig


class MotivesConfig(AppConfig):
    name = "motives"
