"""Module entry point for `python -m hochq`."""

from hochq.main import main


if __name__ == "__main__":
    raise SystemExit(main())
