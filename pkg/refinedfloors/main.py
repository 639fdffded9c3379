import sys

from dotenv import load_dotenv

from cli import run

# Load environment variables from .env file
load_dotenv()


if __name__ == "__main__":
    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        # Clean exit without traceback
        print("\nInterrupted.", file=sys.stderr)
        sys.exit(130)
