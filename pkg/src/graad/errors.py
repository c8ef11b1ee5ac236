"""Exception hierarchy shared across the package."""


class GraadError(Exception):
    """Base class for all package errors."""


class EncodingError(GraadError):
    """Malformed or out-of-range canonical encoding."""


class IntegrityError(GraadError):
    """Authenticated decryption failed (wrong key or tampered ciphertext)."""


class DegenerateKeyError(GraadError):
    """A key-agreement input would produce a degenerate shared secret."""


class DirectoryError(GraadError):
    """Group directory violates a structural invariant."""


class SelectionError(GraadError):
    """A selection proof (sigma_g / sigma_u) failed verification."""


class RegistrationError(GraadError):
    """Duplicate identity, unknown group, or unknown revocation target."""


class WireError(GraadError):
    """Wire message does not parse under the framing rules."""


class ProtocolError(GraadError):
    """A session was driven outside its state machine contract."""


class TraceRejected(GraadError):
    """Trace evidence failed verification; carries a reason code."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class WorkspaceError(GraadError):
    """Workspace files are missing, corrupt, or version-mismatched."""


class StabilityError(GraadError):
    """Queue model parameters violate the stability condition rho < 1."""
