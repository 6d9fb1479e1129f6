from django.apps import AppConfig


class ClasificacionConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "clasificacion"
    verbose_name = "Clasificación de espacios MF con cociente unidimensional"
