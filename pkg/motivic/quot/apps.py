from django.apps import AppConfig


class QuotConfig(AppConfig):
    name = "quot"
