# Telescopia - exaktes kreatives Teleskopieren

__version__ = "0.1.0"
