#!/usr/bin/env python
"""
Entry point of the GInverse project.

    python manage.py ginverse wdmp --a A.txt --w W.txt --verify
    python manage.py test apps.quaternions apps.inverses apps.oracle
"""
import os
import sys


def main():
    """Run the ginverse command or any other management task."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Django is not importable; install requirements.txt into the "
            "active environment first."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
