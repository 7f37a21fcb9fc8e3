# Core Utilities
