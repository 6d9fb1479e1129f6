"""
Django settings for pvkit_lab project.

El proyecto usa Django como marco de aplicación para la herramienta de línea de
comandos `pvkit`: no hay base de datos ni servidor HTTP. Toda la configuración
propia se lee con python-decouple, de modo que cada valor puede venir del
entorno o de un archivo .env.
"""

from pathlib import Path

from decouple import Csv, config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config(
    "DJANGO_SECRET_KEY",
    default="django-insecure-pvkit-local-only-0b7f3c1e9a5d42c8",
)

DEBUG = config("DJANGO_DEBUG", default=False, cast=bool)

ALLOWED_HOSTS = config("DJANGO_ALLOWED_HOSTS", default="", cast=Csv())


# Application definition

INSTALLED_APPS = [
    "django.contrib.auth",
    "django.contrib.contenttypes",
    "rest_framework",
    "clasificacion",
]

MIDDLEWARE = []

# Sin persistencia: los reportes se emiten por stdout.
DATABASES = {}

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# REST Framework: solo se usan serializers y JSONRenderer.
REST_FRAMEWORK = {
    "DEFAULT_RENDERER_CLASSES": ("rest_framework.renderers.JSONRenderer",),
    "DEFAULT_AUTHENTICATION_CLASSES": (),
    "DEFAULT_PERMISSION_CLASSES": (),
    "UNAUTHENTICATED_USER": None,
    "COERCE_DECIMAL_TO_STRING": True,
}


# Verificación de espacios prehomogéneos
PVKIT_SEED = config("PVKIT_SEED", default=0, cast=int)
PVKIT_JOBS = config("PVKIT_JOBS", default=1, cast=int)
PVKIT_MAX_RETRIES = config("PVKIT_MAX_RETRIES", default=64, cast=int)
PVKIT_SAMPLE_BOUND = config("PVKIT_SAMPLE_BOUND", default=3, cast=int)
PVKIT_INVARIANT_POINTS = config("PVKIT_INVARIANT_POINTS", default=10, cast=int)
PVKIT_ENABLE_SPIN10 = config("PVKIT_ENABLE_SPIN10", default=True, cast=bool)
PVKIT_LOG_LEVEL = config("PVKIT_LOG_LEVEL", default="WARNING")


# Logging
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name} [{process}] {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        "clasificacion": {
            "handlers": ["console"],
            "level": PVKIT_LOG_LEVEL,
            "propagate": False,
        },
    },
}
