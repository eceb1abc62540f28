"""
Django settings for the GInverse project.

This file contains the configuration for the quaternion generalized-inverse
toolkit. There is no web surface: the project is driven through the
`ginverse` management command and the Django test runner, so only the
pieces those need are configured here (installed apps, logging, the
REST framework renderer used for JSON reports, and the GINVERSE limits).
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'GINVERSE_SECRET_KEY',
    'django-insecure-ginverse-local-key-not-used-for-any-signing',
)

DEBUG = os.environ.get('GINVERSE_DEBUG', '') == '1'

ALLOWED_HOSTS = []


# Application definition
# Organized into Django core apps, third-party apps, and custom apps
INSTALLED_APPS = [
    # Django core apps
    'django.contrib.auth',
    'django.contrib.contenttypes',

    # Third-party apps
    'rest_framework',  # Serializers and JSON rendering for reports

    # Custom apps - organized in apps/ directory
    'apps.quaternions',  # Exact quaternion scalars, matrices and determinants
    'apps.inverses',  # Determinantal representations and the CLI
    'apps.oracle',  # Independent complex-embedding ground truth
]


# Database
# Nothing is persisted; the default database only satisfies contrib apps.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True


# Default primary key field type
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# REST Framework Configuration
REST_FRAMEWORK = {
    # Reports are rendered as JSON only
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],

    # Keep exact rationals as strings, never floats
    'COERCE_DECIMAL_TO_STRING': True,
}


# Generalized inverse configuration
GINVERSE = {
    # Largest square dimension a determinantal sum may expand (n! terms)
    'MAX_DIM': int(os.environ.get('GINVERSE_MAX_DIM', 7)),

    # Worker threads for entrywise evaluation, a hint only under the GIL; 1 is serial
    'THREADS': int(os.environ.get('GINVERSE_THREADS', 1)),

    # Oracle outputs are checked against their defining equations
    'ORACLE_SELF_CHECK': True,
}


# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': os.environ.get('GINVERSE_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
