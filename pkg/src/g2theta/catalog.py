"""Identity tables.

Each entry is a signed sum of theta products written one term per line::

    [sign] [integer] acbd(u,v) acbd^2(u,v) ...

``acbd`` is a characteristic, ``^2`` repeats a factor, and ``=`` starts the
next side of the equation (several ``=`` form a chain of equal
expressions).  A side consisting of ``0`` alone is empty.  Arguments use
the :mod:`g2theta.argexpr` text form.
"""

# Relations in y, z, y', z' (and alpha, beta, alpha', beta' where free).
THETA_IDENTITIES = {
    "master": """
    0000(alpha,beta) 0000(alpha',beta') 0000(y+y'+alpha,z+z'+beta) 0000(y-y'+alpha',z-z'+beta')
    + 0100(alpha,beta) 0100(alpha',beta') 0100(y+y'+alpha,z+z'+beta) 0100(y-y'+alpha',z-z'+beta')
    + 1000(alpha,beta) 1000(alpha',beta') 1000(y+y'+alpha,z+z'+beta) 1000(y-y'+alpha',z-z'+beta')
    + 1100(alpha,beta) 1100(alpha',beta') 1100(y+y'+alpha,z+z'+beta) 1100(y-y'+alpha',z-z'+beta')
    = 0000(y+alpha+alpha',z+beta+beta') 0000(y,z) 0000(y'+alpha-alpha',z'+beta-beta') 0000(y',z')
    + 0100(y+alpha+alpha',z+beta+beta') 0100(y,z) 0100(y'+alpha-alpha',z'+beta-beta') 0100(y',z')
    + 1000(y+alpha+alpha',z+beta+beta') 1000(y,z) 1000(y'+alpha-alpha',z'+beta-beta') 1000(y',z')
    + 1100(y+alpha+alpha',z+beta+beta') 1100(y,z) 1100(y'+alpha-alpha',z'+beta-beta') 1100(y',z')
""",
    "kossak-1": """
    0000(alpha,beta) 0011(0,0) 0000(y+y'+alpha,z+z'+beta) 0011(y-y',z-z')
    = 0000(y+alpha,z+beta) 0011(y,z) 0000(y'+alpha,z'+beta) 0011(y',z')
    - 1000(y+alpha,z+beta) 1011(y,z) 1000(y'+alpha,z'+beta) 1011(y',z')
    - 0110(y+alpha,z+beta) 0101(y,z) 0110(y'+alpha,z'+beta) 0101(y',z')
    + 1110(y+alpha,z+beta) 1101(y,z) 1110(y'+alpha,z'+beta) 1101(y',z')
""",
    "kossak-2": """
    0010(alpha,beta) 0001(0,0) 0000(y+y'+alpha,z+z'+beta) 0011(y-y',z-z')
    = 0010(y+alpha,z+beta) 0001(y,z) 0000(y'+alpha,z'+beta) 0011(y',z')
    - 0110(y+alpha,z+beta) 0101(y,z) 0100(y'+alpha,z'+beta) 0111(y',z')
    + 0000(y+alpha,z+beta) 0011(y,z) 0010(y'+alpha,z'+beta) 0001(y',z')
    - 0100(y+alpha,z+beta) 0111(y,z) 0110(y'+alpha,z'+beta) 0101(y',z')
""",
    "kossak-3": """
    0001(alpha,beta) 0010(0,0) 0000(y+y'+alpha,z+z'+beta) 0011(y-y',z-z')
    = 0001(y+alpha,z+beta) 0010(y,z) 0000(y'+alpha,z'+beta) 0011(y',z')
    - 1001(y+alpha,z+beta) 1010(y,z) 1000(y'+alpha,z'+beta) 1011(y',z')
    + 0000(y+alpha,z+beta) 0011(y,z) 0001(y'+alpha,z'+beta) 0010(y',z')
    - 1000(y+alpha,z+beta) 1011(y,z) 1001(y'+alpha,z'+beta) 1010(y',z')
""",
    "theta-add-1": """
    0011^2(0,0) 0011(y+y',z+z') 0011(y-y',z-z')
    = 0011^2(y,z) 0011^2(y',z')
    - 1011^2(y,z) 1011^2(y',z')
    - 0101^2(y,z) 0101^2(y',z')
    + 1101^2(y,z) 1101^2(y',z')
""",
    "theta-add-2": """
    0001(0,0) 0011(0,0) 0001(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 0001(y,z) 0011(y',z') 0001(y',z')
    - 1011(y,z) 1001(y,z) 1011(y',z') 1001(y',z')
    - 0101(y,z) 0111(y,z) 0101(y',z') 0111(y',z')
    + 1101(y,z) 1111(y,z) 1101(y',z') 1111(y',z')
""",
    "theta-add-3": """
    0010(0,0) 0011(0,0) 0010(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 0010(y,z) 0011(y',z') 0010(y',z')
    - 1011(y,z) 1010(y,z) 1011(y',z') 1010(y',z')
    - 0101(y,z) 0100(y,z) 0101(y',z') 0100(y',z')
    + 1101(y,z) 1100(y,z) 1101(y',z') 1100(y',z')
""",
    "theta-add-4": """
    1001(0,0) 0011(0,0) 1001(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 1001(y,z) 0011(y',z') 1001(y',z')
    - 1011(y,z) 0001(y,z) 1011(y',z') 0001(y',z')
    + 0101(y,z) 1111(y,z) 0101(y',z') 1111(y',z')
    - 1101(y,z) 0111(y,z) 1101(y',z') 0111(y',z')
""",
    "theta-add-5": """
    0110(0,0) 0011(0,0) 0110(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 0110(y,z) 0011(y',z') 0110(y',z')
    - 1011(y,z) 1110(y,z) 1011(y',z') 1110(y',z')
    - 0101(y,z) 0000(y,z) 0101(y',z') 0000(y',z')
    + 1101(y,z) 1000(y,z) 1101(y',z') 1000(y',z')
""",
    "theta-add-6": """
    0100(0,0) 0011(0,0) 0100(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 0100(y,z) 0011(y',z') 0100(y',z')
    - 1011(y,z) 1100(y,z) 1011(y',z') 1100(y',z')
    - 0101(y,z) 0010(y,z) 0101(y',z') 0010(y',z')
    + 1101(y,z) 1010(y,z) 1101(y',z') 1010(y',z')
""",
    "theta-add-7": """
    1000(0,0) 0011(0,0) 1000(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 1000(y,z) 0011(y',z') 1000(y',z')
    - 1011(y,z) 0000(y,z) 1011(y',z') 0000(y',z')
    + 0101(y,z) 1110(y,z) 0101(y',z') 1110(y',z')
    - 1101(y,z) 0110(y,z) 1101(y',z') 0110(y',z')
""",
    "theta-add-8": """
    1100(0,0) 0011(0,0) 1100(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 1100(y,z) 0011(y',z') 1100(y',z')
    - 1011(y,z) 0100(y,z) 1011(y',z') 0100(y',z')
    + 0101(y,z) 1010(y,z) 0101(y',z') 1010(y',z')
    - 1101(y,z) 0010(y,z) 1101(y',z') 0010(y',z')
""",
    "theta-add-9": """
    1111(0,0) 0011(0,0) 1111(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 1111(y,z) 0011(y',z') 1111(y',z')
    - 1011(y,z) 0111(y,z) 1011(y',z') 0111(y',z')
    + 0101(y,z) 1001(y,z) 0101(y',z') 1001(y',z')
    - 1101(y,z) 0001(y,z) 1101(y',z') 0001(y',z')
""",
    "theta-add-10": """
    0000(0,0) 0011(0,0) 0000(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 0000(y,z) 0011(y',z') 0000(y',z')
    - 1011(y,z) 1000(y,z) 1011(y',z') 1000(y',z')
    - 0101(y,z) 0110(y,z) 0101(y',z') 0110(y',z')
    + 1101(y,z) 1110(y,z) 1101(y',z') 1110(y',z')
""",
    "theta-add-11": """
    1001(0,0) 0001(0,0) 1011(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 1011(y,z) 0001(y',z') 1001(y',z')
    - 0111(y,z) 1111(y,z) 0101(y',z') 1101(y',z')
    + 0001(y,z) 1001(y,z) 0011(y',z') 1011(y',z')
    - 0101(y,z) 1101(y,z) 0111(y',z') 1111(y',z')
""",
    "theta-add-12": """
    1000(0,0) 0001(0,0) 1010(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 1010(y,z) 0001(y',z') 1000(y',z')
    - 0111(y,z) 1110(y,z) 0101(y',z') 1100(y',z')
    + 0001(y,z) 1000(y,z) 0011(y',z') 1010(y',z')
    - 0101(y,z) 1100(y,z) 0111(y',z') 1110(y',z')
""",
    "theta-add-13": """
    1100(0,0) 0001(0,0) 1110(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 1110(y,z) 0001(y',z') 1100(y',z')
    - 0111(y,z) 1010(y,z) 0101(y',z') 1000(y',z')
    + 0001(y,z) 1100(y,z) 0011(y',z') 1110(y',z')
    - 0101(y,z) 1000(y,z) 0111(y',z') 1010(y',z')
""",
    "theta-add-14": """
    0110(0,0) 0010(0,0) 0111(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 0111(y,z) 0010(y',z') 0110(y',z')
    - 1011(y,z) 1111(y,z) 1010(y',z') 1110(y',z')
    + 0010(y,z) 0110(y,z) 0011(y',z') 0111(y',z')
    - 1010(y,z) 1110(y,z) 1011(y',z') 1111(y',z')
""",
    "theta-add-15": """
    0100(0,0) 0010(0,0) 0101(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 0101(y,z) 0010(y',z') 0100(y',z')
    - 1011(y,z) 1101(y,z) 1010(y',z') 1100(y',z')
    + 0010(y,z) 0100(y,z) 0011(y',z') 0101(y',z')
    - 1010(y,z) 1100(y,z) 1011(y',z') 1101(y',z')
""",
    "theta-add-16": """
    1100(0,0) 0010(0,0) 1101(y+y',z+z') 0011(y-y',z-z')
    = 0011(y,z) 1101(y,z) 0010(y',z') 1100(y',z')
    - 1011(y,z) 0101(y,z) 1010(y',z') 0100(y',z')
    + 0010(y,z) 1100(y,z) 0011(y',z') 1101(y',z')
    - 1010(y,z) 0100(y,z) 1011(y',z') 0101(y',z')
""",
    "appendix-A1": """
    0000(alpha,beta) 0000(1/2,1/2) 0000(y+y'+alpha,z+z'+beta) 0000(y-y'+1/2,z-z'+1/2)
    + 1100(alpha,beta) 1100(1/2,1/2) 1100(y+y'+alpha,z+z'+beta) 1100(y-y'+1/2,z-z'+1/2)
    = 0000(y+alpha+1/2,z+beta+1/2) 0000(y,z) 0000(y'+alpha+1/2,z'+beta+1/2) 0000(y',z')
    - 0100(y+alpha+1/2,z+beta+1/2) 0100(y,z) 0100(y'+alpha+1/2,z'+beta+1/2) 0100(y',z')
    - 1000(y+alpha+1/2,z+beta+1/2) 1000(y,z) 1000(y'+alpha+1/2,z'+beta+1/2) 1000(y',z')
    + 1100(y+alpha+1/2,z+beta+1/2) 1100(y,z) 1100(y'+alpha+1/2,z'+beta+1/2) 1100(y',z')
""",
    "appendix-A2": """
    0000(alpha,beta) 0000(1/2,1/2) 0000(y+y'+alpha,z+z'+beta) 0000(y-y'+1/2,z-z'+1/2)
    - 1100(alpha,beta) 1100(1/2,1/2) 1100(y+y'+alpha,z+z'+beta) 1100(y-y'+1/2,z-z'+1/2)
    = 0001(y+alpha+1/2,z+beta+1/2) 0001(y,z) 0001(y'+alpha+1/2,z'+beta+1/2) 0001(y',z')
    - 0101(y+alpha+1/2,z+beta+1/2) 0101(y,z) 0101(y'+alpha+1/2,z'+beta+1/2) 0101(y',z')
    - 1001(y+alpha+1/2,z+beta+1/2) 1001(y,z) 1001(y'+alpha+1/2,z'+beta+1/2) 1001(y',z')
    + 1101(y+alpha+1/2,z+beta+1/2) 1101(y,z) 1101(y'+alpha+1/2,z'+beta+1/2) 1101(y',z')
""",
    "appendix-A3": """
    2 0000(alpha,beta) 0000(1/2,1/2) 0000(y+y'+alpha,z+z'+beta) 0000(y-y'+1/2,z-z'+1/2)
    = 0000(y+alpha+1/2,z+beta+1/2) 0000(y,z) 0000(y'+alpha+1/2,z'+beta+1/2) 0000(y',z')
    - 0100(y+alpha+1/2,z+beta+1/2) 0100(y,z) 0100(y'+alpha+1/2,z'+beta+1/2) 0100(y',z')
    - 1000(y+alpha+1/2,z+beta+1/2) 1000(y,z) 1000(y'+alpha+1/2,z'+beta+1/2) 1000(y',z')
    + 1100(y+alpha+1/2,z+beta+1/2) 1100(y,z) 1100(y'+alpha+1/2,z'+beta+1/2) 1100(y',z')
    + 0001(y+alpha+1/2,z+beta+1/2) 0001(y,z) 0001(y'+alpha+1/2,z'+beta+1/2) 0001(y',z')
    - 0101(y+alpha+1/2,z+beta+1/2) 0101(y,z) 0101(y'+alpha+1/2,z'+beta+1/2) 0101(y',z')
    - 1001(y+alpha+1/2,z+beta+1/2) 1001(y,z) 1001(y'+alpha+1/2,z'+beta+1/2) 1001(y',z')
    + 1101(y+alpha+1/2,z+beta+1/2) 1101(y,z) 1101(y'+alpha+1/2,z'+beta+1/2) 1101(y',z')
""",
    "appendix-A4": """
    0000(alpha,beta) 0000(0,1/2) 0000(y+y'+alpha,z+z'+beta) 0000(y-y',z-z'+1/2)
    + 1000(alpha,beta) 1000(0,1/2) 1000(y+y'+alpha,z+z'+beta) 1000(y-y',z-z'+1/2)
    = 0000(y+alpha,z+beta+1/2) 0000(y,z) 0000(y'+alpha,z'+beta+1/2) 0000(y',z')
    - 0100(y+alpha,z+beta+1/2) 0100(y,z) 0100(y'+alpha,z'+beta+1/2) 0100(y',z')
    + 1000(y+alpha,z+beta+1/2) 1000(y,z) 1000(y'+alpha,z'+beta+1/2) 1000(y',z')
    - 1100(y+alpha,z+beta+1/2) 1100(y,z) 1100(y'+alpha,z'+beta+1/2) 1100(y',z')
""",
    "appendix-A5": """
    0000(alpha,beta) 0000(0,1/2) 0000(y+y'+alpha,z+z'+beta) 0000(y-y',z-z'+1/2)
    + 1000(alpha,beta) 1000(0,1/2) 1000(y+y'+alpha,z+z'+beta) 1000(y-y',z-z'+1/2)
    = 0001(y+alpha,z+beta+1/2) 0001(y,z) 0001(y'+alpha,z'+beta+1/2) 0001(y',z')
    - 0101(y+alpha,z+beta+1/2) 0101(y,z) 0101(y'+alpha,z'+beta+1/2) 0101(y',z')
    + 1001(y+alpha,z+beta+1/2) 1001(y,z) 1001(y'+alpha,z'+beta+1/2) 1001(y',z')
    - 1101(y+alpha,z+beta+1/2) 1101(y,z) 1101(y'+alpha,z'+beta+1/2) 1101(y',z')
""",
    "appendix-A6": """
    0
    = 0000(y+alpha+1/2,z+beta+1/2) 0000(y,z) 0000(y'+alpha+1/2,z'+beta+1/2) 0000(y',z')
    - 0100(y+alpha+1/2,z+beta+1/2) 0100(y,z) 0100(y'+alpha+1/2,z'+beta+1/2) 0100(y',z')
    + 1000(y+alpha+1/2,z+beta+1/2) 1000(y,z) 1000(y'+alpha+1/2,z'+beta+1/2) 1000(y',z')
    - 1100(y+alpha+1/2,z+beta+1/2) 1100(y,z) 1100(y'+alpha+1/2,z'+beta+1/2) 1100(y',z')
    - 0001(y+alpha+1/2,z+beta+1/2) 0001(y,z) 0001(y'+alpha+1/2,z'+beta+1/2) 0001(y',z')
    + 0101(y+alpha+1/2,z+beta+1/2) 0101(y,z) 0101(y'+alpha+1/2,z'+beta+1/2) 0101(y',z')
    - 1001(y+alpha+1/2,z+beta+1/2) 1001(y,z) 1001(y'+alpha+1/2,z'+beta+1/2) 1001(y',z')
    + 1101(y+alpha+1/2,z+beta+1/2) 1101(y,z) 1101(y'+alpha+1/2,z'+beta+1/2) 1101(y',z')
""",
    "appendix-A7": """
    0000(alpha,beta) 0011(0,0) 0000(y+y'+alpha,z+z'+beta) 0011(y-y',z-z')
    = 0011(y+alpha,z+beta) 0000(y,z) 0011(y'+alpha,z'+beta) 0000(y',z')
    - 0111(y+alpha,z+beta) 0100(y,z) 0111(y'+alpha,z'+beta) 0100(y',z')
    - 1010(y+alpha,z+beta) 1001(y,z) 1010(y'+alpha,z'+beta) 1001(y',z')
    + 1110(y+alpha,z+beta) 1101(y,z) 1110(y'+alpha,z'+beta) 1101(y',z')
""",
    "appendix-A8": """
    0000(alpha,beta) 0011(0,0) 0000(y+y'+alpha,z+z'+beta) 0011(y-y',z-z')
    = 0000(y+alpha,z+beta) 0011(y,z) 0000(y'+alpha,z'+beta) 0011(y',z')
    - 0100(y+alpha,z+beta) 0111(y,z) 0100(y'+alpha,z'+beta) 0111(y',z')
    - 1001(y+alpha,z+beta) 1010(y,z) 1001(y'+alpha,z'+beta) 1010(y',z')
    + 1101(y+alpha,z+beta) 1110(y,z) 1101(y'+alpha,z'+beta) 1110(y',z')
    = 0000(y+alpha,z+beta) 0011(y,z) 0000(y'+alpha,z'+beta) 0011(y',z')
    - 1000(y+alpha,z+beta) 1011(y,z) 1000(y'+alpha,z'+beta) 1011(y',z')
    - 0110(y+alpha,z+beta) 0101(y,z) 0110(y'+alpha,z'+beta) 0101(y',z')
    + 1110(y+alpha,z+beta) 1101(y,z) 1110(y'+alpha,z'+beta) 1101(y',z')
""",
    "appendix-A9": """
    1100(alpha,beta) 1100(1/2,1/2) 1100(y+y'+alpha,z+z'+beta) 1100(y-y'+1/2,z-z'+1/2)
    = 0000(y+alpha+1/2,z+beta+1/2) 0000(y,z) 0000(y'+alpha+1/2,z'+beta+1/2) 0000(y',z')  - 0100(y+alpha+1/2,z+beta+1/2) 0100(y,z) 0100(y'+alpha+1/2,z'+beta+1/2) 0100(y',z')  - 1000(y+alpha+1/2,z+beta+1/2) 1000(y,z) 1000(y'+alpha+1/2,z'+beta+1/2) 1000(y',z')  + 1100(y+alpha+1/2,z+beta+1/2) 1100(y,z) 1100(y'+alpha+1/2,z'+beta+1/2) 1100(y',z')
    = - 0001(y+alpha+1/2,z+beta+1/2) 0001(y,z) 0001(y'+alpha+1/2,z'+beta+1/2) 0001(y',z')  + 0101(y+alpha+1/2,z+beta+1/2) 0101(y,z) 0101(y'+alpha+1/2,z'+beta+1/2) 0101(y',z')  + 1001(y+alpha+1/2,z+beta+1/2) 1001(y,z) 1001(y'+alpha+1/2,z'+beta+1/2) 1001(y',z')  - 1101(y+alpha+1/2,z+beta+1/2) 1101(y,z) 1101(y'+alpha+1/2,z'+beta+1/2) 1101(y',z')
""",
    "appendix-A10": """
    0
    = 0000(y+alpha+1/2,z+beta+1/2) 0000(y,z) 0000(y'+alpha+1/2,z'+beta+1/2) 0000(y',z')  - 0100(y+alpha+1/2,z+beta+1/2) 0100(y,z) 0100(y'+alpha+1/2,z'+beta+1/2) 0100(y',z')  - 1000(y+alpha+1/2,z+beta+1/2) 1000(y,z) 1000(y'+alpha+1/2,z'+beta+1/2) 1000(y',z')  + 1100(y+alpha+1/2,z+beta+1/2) 1100(y,z) 1100(y'+alpha+1/2,z'+beta+1/2) 1100(y',z')  + 0010(y+alpha+1/2,z+beta+1/2) 0010(y,z) 0010(y'+alpha+1/2,z'+beta+1/2) 0010(y',z')  - 1010(y+alpha+1/2,z+beta+1/2) 1010(y,z) 1010(y'+alpha+1/2,z'+beta+1/2) 1010(y',z')  - 0110(y+alpha+1/2,z+beta+1/2) 0110(y,z) 0110(y'+alpha+1/2,z'+beta+1/2) 0110(y',z')  + 1110(y+alpha+1/2,z+beta+1/2) 1110(y,z) 1110(y'+alpha+1/2,z'+beta+1/2) 1110(y',z')
""",
    "appendix-A11": """
    0000(alpha,beta) 0000(0,1/2) 0000(y+y'+alpha,z+z'+beta) 0000(y-y',z-z'+1/2)
    - 1000(alpha,beta) 1000(0,1/2) 1000(y+y'+alpha,z+z'+beta) 1000(y-y',z-z'+1/2)
    = 0010(y+alpha,z+beta+1/2) 0010(y,z) 0010(y'+alpha,z'+beta+1/2) 0010(y',z')
    - 0110(y+alpha,z+beta+1/2) 0110(y,z) 0110(y'+alpha,z'+beta+1/2) 0110(y',z')
    + 1010(y+alpha,z+beta+1/2) 1010(y,z) 1010(y'+alpha,z'+beta+1/2) 1010(y',z')
    - 1110(y+alpha,z+beta+1/2) 1110(y,z) 1110(y'+alpha,z'+beta+1/2) 1110(y',z')
""",
    "appendix-A12": """
    2 0000(alpha+1/2,beta) 0000(0,1/2) 0000(y+y'+alpha+1/2,z+z'+beta) 0000(y-y',z-z'+1/2)
    = 0000(y+alpha+1/2,z+beta+1/2) 0000(y,z) 0000(y'+alpha+1/2,z'+beta+1/2) 0000(y',z')
    - 0100(y+alpha+1/2,z+beta+1/2) 0100(y,z) 0100(y'+alpha+1/2,z'+beta+1/2) 0100(y',z')
    + 1000(y+alpha+1/2,z+beta+1/2) 1000(y,z) 1000(y'+alpha+1/2,z'+beta+1/2) 1000(y',z')
    - 1100(y+alpha+1/2,z+beta+1/2) 1100(y,z) 1100(y'+alpha+1/2,z'+beta+1/2) 1100(y',z')
    + 0010(y+alpha+1/2,z+beta+1/2) 0010(y,z) 0010(y'+alpha+1/2,z'+beta+1/2) 0010(y',z')
    - 0110(y+alpha+1/2,z+beta+1/2) 0110(y,z) 0110(y'+alpha+1/2,z'+beta+1/2) 0110(y',z')
    + 1010(y+alpha+1/2,z+beta+1/2) 1010(y,z) 1010(y'+alpha+1/2,z'+beta+1/2) 1010(y',z')
    - 1110(y+alpha+1/2,z+beta+1/2) 1110(y,z) 1110(y'+alpha+1/2,z'+beta+1/2) 1110(y',z')
""",
    "appendix-A13": """
    0000(alpha+1/2,beta) 0000(0,1/2) 0000(y+y'+alpha+1/2,z+z'+beta) 0000(y-y',z-z'+1/2)
    = 0000(y+alpha+1/2,z+beta+1/2) 0000(y,z) 0000(y'+alpha+1/2,z'+beta+1/2) 0000(y',z')  - 0100(y+alpha+1/2,z+beta+1/2) 0100(y,z) 0100(y'+alpha+1/2,z'+beta+1/2) 0100(y',z')  + 0010(y+alpha+1/2,z+beta+1/2) 0010(y,z) 0010(y'+alpha+1/2,z'+beta+1/2) 0010(y',z')  - 0110(y+alpha+1/2,z+beta+1/2) 0110(y,z) 0110(y'+alpha+1/2,z'+beta+1/2) 0110(y',z')
""",
    "appendix-A14": """
    0010(alpha,beta) 0001(0,0) 0000(y+y'+alpha,z+z'+beta) 0011(y-y',z-z')
    = 0010(y+alpha,z+beta) 0001(y,z) 0000(y'+alpha,z'+beta) 0011(y',z')  - 0110(y+alpha,z+beta) 0101(y,z) 0100(y'+alpha,z'+beta) 0111(y',z')  + 0000(y+alpha,z+beta) 0011(y,z) 0010(y'+alpha,z'+beta) 0001(y',z')  - 0100(y+alpha,z+beta) 0111(y,z) 0110(y'+alpha,z'+beta) 0101(y',z')
""",
    "appendix-A15": """
    0001(alpha,beta) 0010(0,0) 0000(y+y'+alpha,z+z'+beta) 0011(y-y',z-z')
    = 0001(y+alpha,z+beta) 0010(y,z) 0000(y'+alpha,z'+beta) 0011(y',z')  - 1001(y+alpha,z+beta) 1010(y,z) 1000(y'+alpha,z'+beta) 1011(y',z')  + 0000(y+alpha,z+beta) 0011(y,z) 0001(y'+alpha,z'+beta) 0010(y',z')  - 1000(y+alpha,z+beta) 1011(y,z) 1001(y'+alpha,z'+beta) 1010(y',z')
""",
}

EQUATION_LABELS = {
    "riemann": "2-2",
    "master": "2-4",
    **{f"kossak-{i}": f"2-{4 + i}" for i in range(1, 4)},
    **{f"theta-add-{i}": f"2-{7 + i}" for i in range(1, 17)},
    **{f"appendix-A{i}": f"A-{i}" for i in range(1, 16)},
}

# (alpha, beta) substituted into a fundamental relation to obtain each
# addition formula, and which relation it was.
ADDITION_SUBSTITUTIONS = {
    1: ("kossak-1", "1/2", "1/2"),
    2: ("kossak-1", "0", "1/2"),
    3: ("kossak-1", "1/2", "0"),
    4: ("kossak-1", "tau1/2", "tau12/2+1/2"),
    5: ("kossak-1", "tau12/2+1/2", "tau2/2"),
    6: ("kossak-1", "tau12/2", "tau2/2"),
    7: ("kossak-1", "tau1/2", "tau12/2"),
    8: ("kossak-1", "tau1/2+tau12/2", "tau2/2+tau12/2"),
    9: ("kossak-1", "tau1/2+tau12/2+1/2", "tau2/2+tau12/2+1/2"),
    10: ("kossak-1", "0", "0"),
    11: ("kossak-2", "tau1/2+1/2", "tau12/2+1/2"),
    12: ("kossak-2", "tau1/2+1/2", "tau12/2"),
    13: ("kossak-2", "tau1/2+tau12/2+1/2", "tau2/2+tau12/2"),
    14: ("kossak-3", "tau12/2+1/2", "tau2/2+1/2"),
    15: ("kossak-3", "tau12/2", "tau2/2+1/2"),
    16: ("kossak-3", "tau1/2+tau12/2", "tau2/2+tau12/2+1/2"),
}

# The six points where theta[0000](alpha, beta) vanishes, in the order of
# addition formulas 11-16.
ODD_HALF_PERIODS = tuple(ADDITION_SUBSTITUTIONS[i][1:] for i in range(11, 17))

# Relations that only hold on the zero set of theta[0000](alpha, beta).
ZERO_LOCUS_IDENTITIES = frozenset(
    ["kossak-2", "kossak-3"] + [f"appendix-A{i}" for i in (9, 10, 13, 14, 15)]
)

# Literal print of theta-add-1, whose last factor lacks the square that the
# other three terms (and the B0 denominator) carry.
PRINTED_THETA_ADD_1 = """
    0011^2(0,0) 0011(y+y',z+z') 0011(y-y',z-z')
    = 0011^2(y,z) 0011^2(y',z')
    - 1011^2(y,z) 1011^2(y',z')
    - 0101^2(y,z) 0101^2(y',z')
    + 1101^2(y,z) 1101(y',z')
"""

# F-addition formulas: index -> (target, constant denominator factors at
# (0, 0), numerator).  Factors are F = theta[ch] / theta[0011]; a factor
# F[0011] = 1 is left out, as in the printed numerators.
F_ADDITIONS = {
    1: ("0001", ("0001",), """
    0001(y,z) 0001(y',z')
    - 1011(y,z) 1001(y,z) 1011(y',z') 1001(y',z')
    - 0101(y,z) 0111(y,z) 0101(y',z') 0111(y',z')
    + 1101(y,z) 1111(y,z) 1101(y',z') 1111(y',z')
"""),
    2: ("0010", ("0010",), """
    0010(y,z) 0010(y',z')
    - 1011(y,z) 1010(y,z) 1011(y',z') 1010(y',z')
    - 0101(y,z) 0100(y,z) 0101(y',z') 0100(y',z')
    + 1101(y,z) 1100(y,z) 1101(y',z') 1100(y',z')
"""),
    3: ("1001", ("1001",), """
    1001(y,z) 1001(y',z')
    - 1011(y,z) 0001(y,z) 1011(y',z') 0001(y',z')
    + 0101(y,z) 1111(y,z) 0101(y',z') 1111(y',z')
    - 1101(y,z) 0111(y,z) 1101(y',z') 0111(y',z')
"""),
    4: ("0110", ("0110",), """
    0110(y,z) 0110(y',z')
    - 1011(y,z) 1110(y,z) 1011(y',z') 1110(y',z')
    - 0101(y,z) 0000(y,z) 0101(y',z') 0000(y',z')
    + 1101(y,z) 1000(y,z) 1101(y',z') 1000(y',z')
"""),
    5: ("0100", ("0100",), """
    0100(y,z) 0100(y',z')
    - 1011(y,z) 1100(y,z) 1011(y',z') 1100(y',z')
    - 0101(y,z) 0010(y,z) 0101(y',z') 0010(y',z')
    + 1101(y,z) 1010(y,z) 1101(y',z') 1010(y',z')
"""),
    6: ("1000", ("1000",), """
    1000(y,z) 1000(y',z')
    - 1011(y,z) 0000(y,z) 1011(y',z') 0000(y',z')
    + 0101(y,z) 1110(y,z) 0101(y',z') 1110(y',z')
    - 1101(y,z) 0110(y,z) 1101(y',z') 0110(y',z')
"""),
    7: ("1100", ("1100",), """
    1100(y,z) 1100(y',z')
    - 1011(y,z) 0100(y,z) 1011(y',z') 0100(y',z')
    + 0101(y,z) 1010(y,z) 0101(y',z') 1010(y',z')
    - 1101(y,z) 0010(y,z) 1101(y',z') 0010(y',z')
"""),
    8: ("1111", ("1111",), """
    1111(y,z) 1111(y',z')
    - 1011(y,z) 0111(y,z) 1011(y',z') 0111(y',z')
    + 0101(y,z) 1001(y,z) 0101(y',z') 1001(y',z')
    - 1101(y,z) 0001(y,z) 1101(y',z') 0001(y',z')
"""),
    9: ("0000", ("0000",), """
    0000(y,z) 0000(y',z')
    - 1011(y,z) 1000(y,z) 1011(y',z') 1000(y',z')
    - 0101(y,z) 0110(y,z) 0101(y',z') 0110(y',z')
    + 1101(y,z) 1110(y,z) 1101(y',z') 1110(y',z')
"""),
    10: ("1011", ("1001", "0001"), """
    1011(y,z) 0001(y',z') 1001(y',z')
    - 0111(y,z) 1111(y,z) 0101(y',z') 1101(y',z')
    + 0001(y,z) 1001(y,z) 1011(y',z')
    - 0101(y,z) 1101(y,z) 0111(y',z') 1111(y',z')
"""),
    11: ("1010", ("1000", "0001"), """
    1010(y,z) 0001(y',z') 1000(y',z')
    - 0111(y,z) 1110(y,z) 0101(y',z') 1100(y',z')
    + 0001(y,z) 1000(y,z) 1010(y',z')
    - 0101(y,z) 1100(y,z) 0111(y',z') 1110(y',z')
"""),
    12: ("1110", ("1100", "0001"), """
    1110(y,z) 0001(y',z') 1100(y',z')
    - 0111(y,z) 1010(y,z) 0101(y',z') 1000(y',z')
    + 0001(y,z) 1100(y,z) 1110(y',z')
    - 0101(y,z) 1000(y,z) 0111(y',z') 1010(y',z')
"""),
    13: ("0111", ("0110", "0010"), """
    0111(y,z) 0010(y',z') 0110(y',z')
    - 1011(y,z) 1111(y,z) 1010(y',z') 1110(y',z')
    + 0010(y,z) 0110(y,z) 0111(y',z')
    - 1010(y,z) 1110(y,z) 1011(y',z') 1111(y',z')
"""),
    14: ("0101", ("0100", "0010"), """
    0101(y,z) 0010(y',z') 0100(y',z')
    - 1011(y,z) 1101(y,z) 1010(y',z') 1100(y',z')
    + 0010(y,z) 0100(y,z) 0101(y',z')
    - 1010(y,z) 1100(y,z) 1011(y',z') 1101(y',z')
"""),
    15: ("1101", ("1100", "0010"), """
    1101(y,z) 0010(y',z') 1100(y',z')
    - 1011(y,z) 0101(y,z) 1010(y',z') 0100(y',z')
    + 0010(y,z) 1100(y,z) 1101(y',z')
    - 1010(y,z) 0100(y,z) 1011(y',z') 0101(y',z')
"""),
}

F_DENOMINATOR_B0 = """
    1
    - 1011^2(y,z) 1011^2(y',z')
    - 0101^2(y,z) 0101^2(y',z')
    + 1101^2(y,z) 1101^2(y',z')
"""
