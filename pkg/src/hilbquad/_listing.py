"""Generator lists of the four quadric ideals, as Macaulay2 text.

Ring: ``S=QQ[a,b,c,d,e,f,g,h,i,j,k,l,m,n,o]``. ``I5``, ``I4`` and ``I3`` are
built cumulatively from ``I8`` by adding the ``EXTRA_*`` blocks.
"""
RING_VARIABLES = "abcdefghijklmno"

PLUCKER = (
    "a*j-b*g+c*f",
    "a*k-b*h+d*f",
    "a*l-b*i+e*f",
    "a*m-c*h+d*g",
    "a*n-c*i+e*g",
    "a*o-d*i+e*h",
    "b*m-c*k+d*j",
    "b*n-c*l+e*j",
    "b*o-d*l+e*k",
    "c*o-d*n+e*m",
    "f*m-g*k+h*j",
    "f*n-g*l+i*j",
    "f*o-h*l+i*k",
    "g*o-h*n+i*m",
    "j*o-k*n+l*m",
)

EXTRA_I5 = (
    "2*d*o-e*n-2*f*o-2*h*l+i*i-2*j*l+3*k*k",
    "2*a*i-2*a*k-2*b*h+2*b*j-c*e+d*d+3*f*f",
    "c*n-2*d*m-2*f*m-2*g*i-2*g*k+3*h*h+j*j",
    "a*n-2*b*m-c*k+d*h+d*j-e*g+f*h-f*j",
    "2*a*o-b*n-c*l+d*i+d*k-e*h+f*i-f*k",
    "c*o-e*m-f*n-2*g*l+h*i+h*k-i*j+j*k",
)

EXTRA_I4 = (
    "a*d+a*f-b*c",
    "a*e-b*d+b*f",
    "g*n-h*m-j*m",
    "c*m-g*h+g*j",
    "e*o-i*l+k*l",
    "i*o+k*o-l*n",
    "3*a*i+a*k-b*h-3*b*j-2*d*f",
    "2*a*k+b*h-3*b*j-3*c*e+3*d*d-d*f-6*f*f",
    "2*a*l+b*i-3*b*k-e*f",
    "2*a*m+c*h-d*g-3*f*g",
    "a*n+2*b*m-c*i+c*k+3*d*h-d*j-2*e*g-6*f*h",
    "2*b*o+d*l-e*k-3*f*l",
    "2*a*o+3*b*n+d*i+3*d*k-e*h-3*e*j-6*f*i-6*f*k",
    "2*b*m-3*c*i+c*k+6*d*h-d*j-3*e*g-6*f*h+3*f*j",
    "b*n-c*l+3*d*k-2*e*j-3*f*i",
    "3*c*n-9*d*m+5*f*m+12*g*i-2*g*k-6*h*h-7*h*j+3*j*j",
    "c*o+2*d*n+e*m-3*h*i+3*j*k",
    "3*d*m-f*m-3*g*i+g*k+2*h*j",
    "2*d*o+e*n-h*l-i*i-i*k+j*l+2*k*k",
    "3*d*n+3*e*m-f*n-2*g*l-6*h*i+6*h*k-i*j+3*j*k",
    "3*e*n-2*f*o-h*l-3*i*i+i*k-3*j*l+6*k*k",
    "2*g*o+h*n-i*m-3*k*m",
    "3*h*o+j*o-k*n-2*l*m",
    "3*a*h-a*j-2*b*g-c*f",
)

EXTRA_I3 = (
    "4*a*g-c*c",
    "4*b*l-e*e",
    "4*m*o-n*n",
    "2*a*h+a*j+b*g-c*d",
    "a*l+b*i+2*b*k-d*e",
    "a*m+c*j-d*g+2*f*g",
    "b*o+d*l-e*i+2*f*l",
    "g*o-i*m-j*n+2*k*m",
    "2*h*o-i*n-j*o+l*m",
    "2*a*i+4*a*k+4*b*h+2*b*j-c*e-2*d*d",
    "c*n-2*d*m+4*f*m-2*g*i+4*g*k-2*j*j",
    "2*d*o-e*n+4*f*o+4*h*l-2*i*i-2*j*l",
    "a*n+b*m+2*c*k-2*d*h+d*j-e*g+4*f*h+2*f*j",
    "a*o+b*n+c*l-d*i+2*d*k-2*e*h+2*f*i+4*f*k",
    "c*o-e*m+2*f*n+g*l-2*h*i+4*h*k-i*j-2*j*k",
)
