import os
from pathlib import Path
from urllib.parse import urlsplit

# -------------------------
# Helpers
# -------------------------
def _env_str(name: str, default: str | None = None) -> str | None:
    v = os.environ.get(name)
    return default if v is None else str(v)

def _env_bool(name: str, default: bool = False) -> bool:
    v = os.environ.get(name)
    if v is None:
        return default
    return str(v).strip().lower() in {"1", "true", "yes", "y", "on"}

def _env_int(name: str, default: int) -> int:
    v = os.environ.get(name)
    if v is None or not str(v).strip():
        return default
    try:
        return int(str(v).strip())
    except ValueError:
        raise RuntimeError(f"{name} must be an integer, got {v!r}")

def _split_env_csv(name: str) -> list[str]:
    raw = os.environ.get(name, "")
    if not raw:
        return []
    return [x.strip() for x in raw.split(",") if x and x.strip()]

def _normalize_origin(origin: str) -> str | None:
    if not origin:
        return None
    o = origin.strip().rstrip("/")
    try:
        parts = urlsplit(o)
    except ValueError:
        return None
    if parts.scheme not in ("http", "https") or not parts.netloc:
        return None
    if parts.path or parts.query or parts.fragment:
        return None
    return f"{parts.scheme}://{parts.netloc}"

def get_cors_allowed_origins() -> list[str]:
    normalized = [_normalize_origin(o) for o in _split_env_csv("CORS_ALLOWED_ORIGINS")]
    return list(dict.fromkeys(x for x in normalized if x))


# -------------------------
# Base
# -------------------------
BASE_DIR = Path(__file__).resolve().parent.parent

# Nothing is signed or stored; the fallback only keeps the CLI usable without an .env
SECRET_KEY = _env_str("DJANGO_SECRET_KEY") or "typeb-local-only"

DEBUG = _env_bool("DEBUG", False)

ALLOWED_HOSTS = _split_env_csv("DJANGO_ALLOWED_HOSTS")
if DEBUG and not ALLOWED_HOSTS:
    ALLOWED_HOSTS = ["*"]


# -------------------------
# Apps
# -------------------------
INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    "django.contrib.staticfiles",

    "rest_framework",
    "drf_spectacular",

    "corsheaders",
    "csp",

    "core",
    "codes",
    "mahonian",
    "enumeration",
    "cli",
    "api",
]

ASGI_APPLICATION = "typeb.asgi.application"


# -------------------------
# Middleware
# -------------------------
MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "corsheaders.middleware.CorsMiddleware",
    "django.middleware.common.CommonMiddleware",
    "csp.middleware.CSPMiddleware",
    "django.middleware.clickjacking.XFrameOptionsMiddleware",
]


# -------------------------
# URLs / Templates
# -------------------------
ROOT_URLCONF = "typeb.urls"

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [
                "django.template.context_processors.debug",
                "django.template.context_processors.request",
            ],
        },
    }
]

WSGI_APPLICATION = "typeb.wsgi.application"


# -------------------------
# Database (unused: nothing is persisted)
# -------------------------
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}


# -------------------------
# Internationalization
# -------------------------
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = True
USE_TZ = True


# -------------------------
# Static
# -------------------------
STATIC_URL = "/static/static/"
STATIC_ROOT = _env_str("STATIC_ROOT", "/vol/web/static")

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# -------------------------
# DRF
# -------------------------
REST_FRAMEWORK = {
    "DEFAULT_SCHEMA_CLASS": "drf_spectacular.openapi.AutoSchema",

    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": ["rest_framework.permissions.AllowAny"],
    "UNAUTHENTICATED_USER": None,

    "DEFAULT_RENDERER_CLASSES": ["rest_framework.renderers.JSONRenderer"],

    "DEFAULT_THROTTLE_CLASSES": [
        "rest_framework.throttling.AnonRateThrottle",
    ],
    "DEFAULT_THROTTLE_RATES": {
        "anon": _env_str("API_ANON_RATE", "1000/hour"),
    },
}

SPECTACULAR_SETTINGS = {
    "TITLE": "Type-B Mahonian toolkit API",
    "DESCRIPTION": "Read-only statistics, rank/unrank, triangles and verification suites for signed permutations.",
    "VERSION": "0.1.0",
    "SERVE_INCLUDE_SCHEMA": False,
}


# -------------------------
# CORS
# -------------------------
CORS_ALLOWED_ORIGINS = get_cors_allowed_origins()
CORS_ALLOW_METHODS = ("GET", "OPTIONS")


# -------------------------
# Basic security headers
# -------------------------
SECURE_CONTENT_TYPE_NOSNIFF = True
SECURE_REFERRER_POLICY = "strict-origin-when-cross-origin"
SECURE_PROXY_SSL_HEADER = ("HTTP_X_FORWARDED_PROTO", "https")
USE_X_FORWARDED_HOST = True
SECURE_SSL_REDIRECT = _env_bool("SECURE_SSL_REDIRECT", False)


# -------------------------
# CSP (swagger UI is served from jsdelivr)
# -------------------------
CONTENT_SECURITY_POLICY = {
    "DIRECTIVES": {
        "default-src": ("'self'",),
        "script-src": ("'self'", "https://cdn.jsdelivr.net", "'unsafe-inline'"),
        "style-src": ("'self'", "https://cdn.jsdelivr.net", "'unsafe-inline'"),
        "img-src": ("'self'", "data:", "https://cdn.jsdelivr.net"),
        "font-src": ("'self'", "https://cdn.jsdelivr.net"),
        "connect-src": ("'self'",),
    }
}


# -------------------------
# Logging (stderr only; stdout carries command output)
# -------------------------
LOG_LEVEL = (_env_str("DJANGO_LOG_LEVEL", "WARNING") or "WARNING").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain"},
    },
    "loggers": {
        **{
            app: {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False}
            for app in ("core", "codes", "mahonian", "enumeration", "cli", "api")
        },
        "django": {"handlers": ["console"], "level": "WARNING"},
    },
}


# -------------------------
# Enumeration / verification
# -------------------------
ENUMERATION_CEILING = _env_int("MAHONIAN_ENUM_CEILING", 9)
ENUMERATION_JOBS = _env_int("MAHONIAN_ENUM_JOBS", 1)
ENUMERATION_PROGRESS_STRIDE = _env_int("MAHONIAN_PROGRESS_STRIDE", 1_000_000)
ENUMERATION_CHUNKS_PER_WORKER = _env_int("MAHONIAN_CHUNKS_PER_WORKER", 8)

# Brute-force checks served over HTTP run on the request thread
API_VERIFY_MAX_N = _env_int("API_VERIFY_MAX_N", 6)

MAHONIAN_FIXTURES_DIR = _env_str("MAHONIAN_FIXTURES_DIR")  # None: bundled mahonian/data/
